#pragma once

namespace gausskit {

// Kahan compensated accumulator; drop-in for += style sums where terms
// alternate hugely in sign.
template <typename Value>
struct KahanAccumulator {
    Value sum = Value{0};
    Value compensation = Value{0};

    void operator+=(Value value) {
        const Value y = value - compensation;
        const Value t = sum + y;
        compensation = (t - sum) - y;
        sum = t;
    }

    operator Value() const { return sum; }
};

}  // namespace gausskit
