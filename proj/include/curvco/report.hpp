#pragma once

#include "curvco/grading.hpp"

#include <optional>
#include <string>
#include <vector>

namespace curvco {

// Result of one axiom verification.
struct AxiomResult {
    std::string axiom;
    bool ok = true;
    std::optional<Bidegree> where; // first offending source bidegree
    std::string detail;
};

struct CheckReport {
    std::string subject;
    std::vector<AxiomResult> results;

    bool ok() const {
        for (auto& r : results)
            if (!r.ok) return false;
        return true;
    }
    const AxiomResult* find(const std::string& axiom) const {
        for (auto& r : results)
            if (r.axiom == axiom) return &r;
        return nullptr;
    }
    bool failed(const std::string& axiom) const {
        const AxiomResult* r = find(axiom);
        return r && !r->ok;
    }
    std::string summary() const;
};

} // namespace curvco
