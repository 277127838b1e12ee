#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "fairorient/model.hpp"

namespace fairorient::test {

inline ItemSpec it(std::string id, std::vector<int> rel, std::vector<long long> vals) {
    ItemSpec spec;
    spec.id = std::move(id);
    spec.relevant = std::move(rel);
    for (long long v : vals) spec.values.push_back(Rational(v));
    return spec;
}

inline ItemSpec itr(std::string id, std::vector<int> rel, std::vector<Rational> vals) {
    ItemSpec spec;
    spec.id = std::move(id);
    spec.relevant = std::move(rel);
    spec.values = std::move(vals);
    return spec;
}

inline Instance inst_of(int n, std::vector<ItemSpec> items) {
    return Instance::build(n, std::move(items));
}

inline Orientation pi_of(const Instance& inst, std::vector<int> owner) {
    return make_orientation(inst, std::move(owner));
}

// Runs f, returning the FairError code it throws ("" when it doesn't).
template <class F>
std::string error_code(F&& f) {
    try {
        f();
    } catch (const FairError& e) {
        return e.code();
    }
    return "";
}

}  // namespace fairorient::test
