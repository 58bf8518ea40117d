// Monomial orders: lex, graded reverse lex, block elimination orders, and
// weight-refined orders (max convention, grevlex tie-break).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "avar/monomial.hpp"

namespace avar {

enum class OrderKind : std::uint8_t { lex, grevlex, block_elim, weight };

class MonomialOrder {
public:
    static MonomialOrder lex() { return MonomialOrder(OrderKind::lex); }
    static MonomialOrder grevlex() { return MonomialOrder(OrderKind::grevlex); }

    // Eliminates exactly the variables whose index appears in `front`.
    static MonomialOrder block_elimination(std::vector<std::size_t> front, std::size_t nvars);

    // Compare by weight first (larger weight = larger monomial), grevlex
    // tie-break. Not a well-order for negative weights; the Buchberger
    // driver only accepts it on homogeneous input.
    static MonomialOrder weighted(std::vector<long long> weights);

    OrderKind kind() const { return kind_; }
    const std::vector<char>& front_mask() const { return front_; }
    const std::vector<long long>& weights() const { return weights_; }

    // >0 when a comes after b (a is larger), <0 when smaller, 0 when equal.
    int compare(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    bool is_global() const { return kind_ != OrderKind::weight; }
    bool operator==(const MonomialOrder&) const = default;
    std::string to_string() const;

private:
    explicit MonomialOrder(OrderKind k) : kind_(k) {}
    OrderKind kind_;
    std::vector<char> front_;
    std::vector<long long> weights_;
};

} // namespace avar
