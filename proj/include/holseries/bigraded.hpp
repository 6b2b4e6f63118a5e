#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "holseries/poincare.hpp"

namespace holseries {

// Table (index1, index2) -> dimension with optional basis labels.
class BigradedTable {
  public:
    std::int64_t dim(int a, int b) const {
        auto it = d_.find({a, b});
        return it == d_.end() ? 0 : it->second;
    }

    void set(int a, int b, std::int64_t v) {
        if (v < 0) throw consistency_error("negative dimension in BigradedTable");
        if (v == 0)
            d_.erase({a, b});
        else
            d_[{a, b}] = v;
    }
    void add_to(int a, int b, std::int64_t v) { set(a, b, dim(a, b) + v); }

    const std::map<std::pair<int, int>, std::int64_t>& entries() const { return d_; }

    std::int64_t total() const {
        std::int64_t t = 0;
        for (auto& [k, v] : d_) t += v;
        return t;
    }

    // collapse onto the first or second index
    PoincarePolynomial project_first() const {
        PoincarePolynomial p;
        for (auto& [k, v] : d_) p.add_to(k.first, v);
        return p;
    }
    PoincarePolynomial project_second() const {
        PoincarePolynomial p;
        for (auto& [k, v] : d_) p.add_to(k.second, v);
        return p;
    }

    void set_labels(int a, int b, std::vector<std::string> ls) {
        labels_[{a, b}] = std::move(ls);
    }
    const std::vector<std::string>* labels(int a, int b) const {
        auto it = labels_.find({a, b});
        return it == labels_.end() ? nullptr : &it->second;
    }

    bool operator==(const BigradedTable& o) const { return d_ == o.d_; }

  private:
    std::map<std::pair<int, int>, std::int64_t> d_;
    std::map<std::pair<int, int>, std::vector<std::string>> labels_;
};

}  // namespace holseries
