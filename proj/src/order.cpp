#include "avar/order.hpp"

#include "avar/errors.hpp"

namespace avar {

namespace {

int lex_cmp(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
}

int grevlex_cmp(const Monomial& a, const Monomial& b) {
    long da = mono_total_degree(a), db = mono_total_degree(b);
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

int grevlex_cmp_masked(const Monomial& a, const Monomial& b, const std::vector<char>& mask, char want) {
    long da = 0, db = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (mask[i] == want) {
            da += a[i];
            db += b[i];
        }
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (mask[i] == want && a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

} // namespace

MonomialOrder MonomialOrder::block_elimination(std::vector<std::size_t> front, std::size_t nvars) {
    MonomialOrder o(OrderKind::block_elim);
    o.front_.assign(nvars, 0);
    for (auto i : front) {
        if (i >= nvars) throw InputError("block order variable index out of range");
        o.front_[i] = 1;
    }
    return o;
}

MonomialOrder MonomialOrder::weighted(std::vector<long long> weights) {
    MonomialOrder o(OrderKind::weight);
    o.weights_ = std::move(weights);
    return o;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
        case OrderKind::lex:
            return lex_cmp(a, b);
        case OrderKind::grevlex:
            return grevlex_cmp(a, b);
        case OrderKind::block_elim: {
            int c = grevlex_cmp_masked(a, b, front_, 1);
            if (c != 0) return c;
            return grevlex_cmp_masked(a, b, front_, 0);
        }
        case OrderKind::weight: {
            __int128 wa = 0, wb = 0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                wa += static_cast<__int128>(weights_[i]) * a[i];
                wb += static_cast<__int128>(weights_[i]) * b[i];
            }
            if (wa != wb) return wa > wb ? 1 : -1;
            return grevlex_cmp(a, b);
        }
    }
    return 0;
}

std::string MonomialOrder::to_string() const {
    switch (kind_) {
        case OrderKind::lex: return "lex";
        case OrderKind::grevlex: return "grevlex";
        case OrderKind::block_elim: return "block-elimination";
        case OrderKind::weight: return "weight-refined";
    }
    return "?";
}

} // namespace avar
