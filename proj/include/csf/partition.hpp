#ifndef CSF_PARTITION_HPP
#define CSF_PARTITION_HPP

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace csf {

// Integer partition: weakly decreasing positive parts. Empty partition allowed.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
        for (int p : parts_)
            if (p < 1) throw std::invalid_argument("partition parts must be positive");
    }

    static Partition from_sorted(std::vector<int> parts) {
        Partition q;
        q.parts_ = std::move(parts);
        return q;
    }

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    int weight() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    // Product of r_i! where r_i = multiplicity of part value i.
    long aut_factor() const {
        long f = 1;
        size_t i = 0;
        while (i < parts_.size()) {
            size_t j = i;
            long run = 1;
            while (j + 1 < parts_.size() && parts_[j + 1] == parts_[i]) {
                ++j;
                ++run;
                f *= run;
            }
            i = j + 1;
        }
        return f;
    }

    Partition with_part(int k) const {
        std::vector<int> v = parts_;
        v.push_back(k);
        return Partition(std::move(v));
    }

    auto operator<=>(const Partition&) const = default;

    std::string str() const {
        std::string s = "[";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + "]";
    }

private:
    std::vector<int> parts_;
};

// All partitions of weight n, in a deterministic order.
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.push_back(Partition::from_sorted(cur));
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

} // namespace csf

#endif
