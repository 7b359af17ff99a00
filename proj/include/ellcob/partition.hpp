#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ellcob {

// Integer partition: weakly decreasing sequence of positive parts.
// The empty partition (weight 0) is allowed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    int multiplicity(int value) const {
        int k = 0;
        for (int p : parts_) k += (p == value);
        return k;
    }

    // Multiset union (sorted concatenation).
    Partition merged(const Partition& o) const {
        std::vector<int> p = parts_;
        p.insert(p.end(), o.parts_.begin(), o.parts_.end());
        std::sort(p.begin(), p.end(), std::greater<int>());
        return Partition(std::move(p));
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + "]";
    }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    // Order by weight, then reverse-lexicographic within a weight (matching
    // the enumeration order of partitions_of).
    friend bool operator<(const Partition& a, const Partition& b) {
        int wa = a.weight(), wb = b.weight();
        if (wa != wb) return wa < wb;
        return a.parts_ > b.parts_;
    }

private:
    std::vector<int> parts_;
};

// All partitions of n, reverse-lexicographic: (n), (n-1,1), ..., (1,...,1).
std::vector<Partition> partitions_of(int n);

// Number of partitions via the pentagonal-number recurrence (test oracle
// lives in the tests; this is the production count used by callers that
// only need the cardinality).
long partition_count(int n);

}  // namespace ellcob
