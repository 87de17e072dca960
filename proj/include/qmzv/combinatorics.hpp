#pragma once

#include <vector>

namespace qmzv {

// Calls visit(idx) for every strictly increasing idx[0] < ... < idx[k-1]
// with entries in [lo, hi]. k = 0 visits the empty tuple once.
template <class Visit>
void for_each_increasing(long lo, long hi, unsigned k, Visit&& visit) {
    std::vector<long> idx(k);
    auto rec = [&](auto& self, unsigned pos, long start) -> void {
        if (pos == k) {
            visit(static_cast<const std::vector<long>&>(idx));
            return;
        }
        for (long v = start; v + static_cast<long>(k - pos - 1) <= hi; ++v) {
            idx[pos] = v;
            self(self, pos + 1, v + 1);
        }
    };
    rec(rec, 0, lo);
}

// Same for weakly increasing tuples idx[0] <= ... <= idx[k-1].
template <class Visit>
void for_each_nondecreasing(long lo, long hi, unsigned k, Visit&& visit) {
    std::vector<long> idx(k);
    auto rec = [&](auto& self, unsigned pos, long start) -> void {
        if (pos == k) {
            visit(static_cast<const std::vector<long>&>(idx));
            return;
        }
        for (long v = start; v <= hi; ++v) {
            idx[pos] = v;
            self(self, pos + 1, v);
        }
    };
    rec(rec, 0, lo);
}

// Calls visit(mult) for every (i_1, ..., i_m) >= 0 with sum_j j*i_j = m,
// i.e. every partition of m written by part multiplicities (mult[j-1] = i_j).
template <class Visit>
void for_each_partition_multiplicity(unsigned m, Visit&& visit) {
    std::vector<unsigned> mult(m, 0);
    auto rec = [&](auto& self, unsigned part, unsigned remaining) -> void {
        if (part == 0) {
            if (remaining == 0) visit(static_cast<const std::vector<unsigned>&>(mult));
            return;
        }
        for (unsigned c = 0; c * part <= remaining; ++c) {
            mult[part - 1] = c;
            self(self, part - 1, remaining - c * part);
        }
        mult[part - 1] = 0;
    };
    if (m == 0) {
        visit(static_cast<const std::vector<unsigned>&>(mult));
        return;
    }
    rec(rec, m, m);
}

}  // namespace qmzv
