// Parser for the polynomial text form emitted by to_string():
//   term ('+'|'-' term)*   with term = [coeff] ('*'? var ('^' int)?)*
// Coefficients are integers or a/b rationals; no decimals, no parentheses.
#include "avar/polynomial.hpp"

#include <cctype>

namespace avar {

namespace {

struct Lexer {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    char take() {
        skip_ws();
        return s[i++];
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw InputError("polynomial syntax error at position " + std::to_string(i) + ": " + msg);
    }

    std::string take_integer() {
        skip_ws();
        std::string out;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) out += s[i++];
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected digits");
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) out += s[i++];
        return out;
    }

    std::string take_name() {
        skip_ws();
        std::string out;
        if (i >= s.size() || !(std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_'))
            fail("expected variable name");
        while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) out += s[i++];
        return out;
    }
};

} // namespace

LaurentPolynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
    Lexer lx{text};
    std::vector<LaurentPolynomial::Term> terms;
    bool first = true;
    while (!lx.done()) {
        int sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            lx.take();
            sign = c == '-' ? -1 : 1;
        } else if (!first) {
            lx.fail("expected '+' or '-' between terms");
        }
        first = false;

        mpq_class coeff = 1;
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
            std::string num = lx.take_integer();
            std::string den = "1";
            if (lx.peek() == '/') {
                lx.take();
                den = lx.take_integer();
            }
            coeff = mpq_class(mpz_class(num), mpz_class(den));
            if (coeff.get_den() == 0) lx.fail("zero denominator");
            coeff.canonicalize();
            saw_coeff = true;
        }
        if (sign < 0) coeff = -coeff;

        Monomial mono = mono_one(ring->nvars());
        bool saw_var = false;
        for (;;) {
            char p = lx.peek();
            if (p == '*') {
                lx.take();
                p = lx.peek();
            } else if (saw_var || saw_coeff) {
                if (!(std::isalpha(static_cast<unsigned char>(p)) || p == '_')) break;
            }
            if (!(std::isalpha(static_cast<unsigned char>(p)) || p == '_')) {
                if (saw_var || saw_coeff) break;
                lx.fail("expected coefficient or variable");
            }
            std::string name = lx.take_name();
            int idx = ring->find_var(name);
            if (idx < 0) throw InputError("unknown variable '" + name + "' in polynomial");
            long e = 1;
            if (lx.peek() == '^') {
                lx.take();
                e = std::stol(lx.take_integer());
            }
            mono[static_cast<std::size_t>(idx)] += static_cast<std::int32_t>(e);
            saw_var = true;
        }
        if (!saw_coeff && !saw_var) lx.fail("empty term");
        terms.push_back({std::move(mono), Coefficient::from_mpq(ring->domain(), coeff)});
    }
    if (first) throw InputError("empty polynomial text");
    return LaurentPolynomial::from_terms(ring, std::move(terms));
}

} // namespace avar
