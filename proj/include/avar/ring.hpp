// Ring descriptor: coefficient domain plus an ordered list of named
// variables, each optionally Laurent (negative exponents permitted).
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "avar/coefficient.hpp"

namespace avar {

struct Variable {
    std::string name;
    bool laurent = false;
    bool operator==(const Variable&) const = default;
};

class Ring {
public:
    Ring(CoeffDomain domain, std::vector<Variable> vars) : domain_(domain), vars_(std::move(vars)) {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            for (std::size_t j = i + 1; j < vars_.size(); ++j)
                if (vars_[i].name == vars_[j].name)
                    throw InputError("duplicate variable name '" + vars_[i].name + "'");
    }

    const CoeffDomain& domain() const { return domain_; }
    const std::vector<Variable>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const Variable& var(std::size_t i) const { return vars_.at(i); }

    int find_var(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i].name == name) return static_cast<int>(i);
        return -1;
    }

    bool operator==(const Ring& o) const { return domain_ == o.domain_ && vars_ == o.vars_; }

private:
    CoeffDomain domain_;
    std::vector<Variable> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(CoeffDomain domain, std::vector<Variable> vars) {
    return std::make_shared<const Ring>(domain, std::move(vars));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

// Same variables, different coefficient domain.
inline RingPtr ring_with_domain(const RingPtr& r, CoeffDomain d) {
    return make_ring(d, r->vars());
}

} // namespace avar
