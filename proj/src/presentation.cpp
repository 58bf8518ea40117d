#include "avar/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace avar {

Word free_reduce(const Word& w) {
    Word out;
    for (auto x : w) {
        if (x == 0) throw InputError("zero letter in word");
        if (!out.empty() && out.back() == -x) out.pop_back();
        else out.push_back(x);
    }
    return out;
}

Word word_inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

Word word_concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Word word_power(const Word& w, long e) {
    Word base = e < 0 ? word_inverse(w) : w;
    long n = e < 0 ? -e : e;
    Word out;
    for (long i = 0; i < n; ++i) out = word_concat(out, base);
    return out;
}

GroupPresentation::GroupPresentation(std::vector<std::string> generator_names, std::vector<Word> relators,
                                     std::vector<Cusp> cusps)
    : gens_(std::move(generator_names)), relators_(std::move(relators)), cusps_(std::move(cusps)) {
    if (gens_.empty()) throw InputError("presentation needs at least one generator");
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].empty() || !std::islower(static_cast<unsigned char>(gens_[i][0])))
            throw InputError("generator name must start with a lowercase letter: '" + gens_[i] + "'");
        for (std::size_t j = i + 1; j < gens_.size(); ++j)
            if (gens_[i] == gens_[j]) throw InputError("duplicate generator name '" + gens_[i] + "'");
    }
    auto check_word = [&](const Word& w) {
        for (auto x : w) {
            std::size_t k = static_cast<std::size_t>(x < 0 ? -x : x);
            if (k == 0 || k > gens_.size()) throw InputError("word letter out of generator range");
        }
    };
    for (auto& r : relators_) {
        check_word(r);
        r = free_reduce(r);
    }
    for (auto& c : cusps_) {
        check_word(c.meridian);
        check_word(c.longitude);
        c.meridian = free_reduce(c.meridian);
        c.longitude = free_reduce(c.longitude);
        if (c.meridian.empty()) throw InputError("cusp meridian must be a nonempty word");
    }
}

std::vector<long> GroupPresentation::abelianization_image(const Word& w) const {
    std::vector<long> v(gens_.size(), 0);
    for (auto x : w) {
        if (x > 0) ++v[static_cast<std::size_t>(x - 1)];
        else --v[static_cast<std::size_t>(-x - 1)];
    }
    return v;
}

std::string print_word(const Word& w, const std::vector<std::string>& gen_names) {
    std::string s;
    for (auto x : w) {
        std::size_t k = static_cast<std::size_t>((x < 0 ? -x : x) - 1);
        const std::string& name = gen_names.at(k);
        if (name.size() == 1) {
            char c = name[0];
            s += x > 0 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        } else {
            std::string body = name;
            if (x < 0) body[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(body[0])));
            s += "[" + body + "]";
        }
    }
    return s;
}

Word parse_word(const std::string& text, const std::vector<std::string>& gen_names, int line) {
    auto find_gen = [&](const std::string& name) -> int {
        for (std::size_t i = 0; i < gen_names.size(); ++i)
            if (gen_names[i] == name) return static_cast<int>(i);
        return -1;
    };
    auto fail = [&](std::size_t col, const std::string& msg) -> void {
        throw InputError("line " + std::to_string(line) + ", column " + std::to_string(col + 1) + ": " + msg);
    };
    Word w;
    for (std::size_t i = 0; i < text.size();) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '[') {
            std::size_t close = text.find(']', i);
            if (close == std::string::npos) fail(i, "unterminated '[' in word");
            std::string body = text.substr(i + 1, close - i - 1);
            if (body.empty()) fail(i, "empty bracketed generator");
            bool inverse = std::isupper(static_cast<unsigned char>(body[0]));
            if (inverse) body[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(body[0])));
            int k = find_gen(body);
            if (k < 0) fail(i, "unknown generator '" + body + "'");
            w.push_back(inverse ? -(k + 1) : (k + 1));
            i = close + 1;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            bool inverse = std::isupper(static_cast<unsigned char>(c));
            std::string name(1, static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
            int k = find_gen(name);
            if (k < 0) fail(i, std::string("unknown generator '") + name + "'");
            w.push_back(inverse ? -(k + 1) : (k + 1));
            ++i;
            continue;
        }
        fail(i, std::string("unexpected character '") + c + "' in word");
    }
    return w;
}

GroupPresentation parse_presentation(const std::string& text) {
    std::vector<std::string> gens;
    bool saw_generators = false;
    std::vector<Word> relators;
    std::vector<Cusp> cusps;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto notspace = [](unsigned char c) { return !std::isspace(c); };
        line.erase(line.begin(), std::find_if(line.begin(), line.end(), notspace));
        line.erase(std::find_if(line.rbegin(), line.rend(), notspace).base(), line.end());
        if (line.empty()) continue;

        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw InputError("line " + std::to_string(lineno) + ": expected '<keyword>: ...'");
        std::string key = line.substr(0, colon);
        std::string rest = line.substr(colon + 1);

        if (key == "generators") {
            if (saw_generators) throw InputError("line " + std::to_string(lineno) + ": duplicate generators line");
            saw_generators = true;
            std::istringstream gs(rest);
            std::string name;
            while (gs >> name) gens.push_back(name);
            if (gens.empty()) throw InputError("line " + std::to_string(lineno) + ": no generators declared");
        } else if (key == "relator") {
            if (!saw_generators) throw InputError("line " + std::to_string(lineno) + ": relator before generators");
            relators.push_back(parse_word(rest, gens, lineno));
        } else if (key == "cusp") {
            if (!saw_generators) throw InputError("line " + std::to_string(lineno) + ": cusp before generators");
            auto mpos = rest.find("meridian=");
            auto lpos = rest.find("longitude=");
            if (mpos == std::string::npos || lpos == std::string::npos || lpos < mpos)
                throw InputError("line " + std::to_string(lineno) + ": cusp needs 'meridian=<word> longitude=<word>'");
            std::string mword = rest.substr(mpos + 9, lpos - (mpos + 9));
            std::string lword = rest.substr(lpos + 10);
            cusps.push_back({parse_word(mword, gens, lineno), parse_word(lword, gens, lineno)});
        } else {
            throw InputError("line " + std::to_string(lineno) + ": unknown keyword '" + key + "'");
        }
    }
    if (!saw_generators) throw InputError("presentation has no generators line");
    return GroupPresentation(gens, relators, cusps);
}

std::string GroupPresentation::print() const {
    std::string s = "generators:";
    for (const auto& g : gens_) s += " " + g;
    s += "\n";
    for (const auto& r : relators_) s += "relator: " + print_word(r, gens_) + "\n";
    for (const auto& c : cusps_)
        s += "cusp: meridian=" + print_word(c.meridian, gens_) + " longitude=" + print_word(c.longitude, gens_) +
             "\n";
    return s;
}

// ---- integer lattice / Smith normal form helpers ----

namespace {

struct SNF {
    std::vector<long> diag;              // invariant factors d_1 | d_2 | ..., nonzero ones
    std::vector<std::vector<long>> V;    // n x n unimodular, D = U * M * V
    std::size_t rank = 0;
};

// Smith normal form of an r x n matrix, tracking only V (column ops).
SNF smith(std::vector<std::vector<long>> M, std::size_t n) {
    SNF out;
    out.V.assign(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) out.V[i][i] = 1;
    std::size_t rows = M.size();
    std::size_t t = 0;
    auto col_add = [&](std::size_t dst, std::size_t src, long k) { // col_dst += k*col_src
        for (std::size_t r = 0; r < rows; ++r) M[r][dst] += k * M[r][src];
        for (std::size_t r = 0; r < n; ++r) out.V[r][dst] += k * out.V[r][src];
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        for (std::size_t r = 0; r < rows; ++r) std::swap(M[r][a], M[r][b]);
        for (std::size_t r = 0; r < n; ++r) std::swap(out.V[r][a], out.V[r][b]);
    };
    auto row_add = [&](std::size_t dst, std::size_t src, long k) {
        for (std::size_t c = 0; c < n; ++c) M[dst][c] += k * M[src][c];
    };
    while (t < rows && t < n) {
        // find pivot: smallest nonzero |entry| in M[t.., t..]
        std::size_t pi = t, pj = t;
        long best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (M[i][j] != 0 && (best == 0 || std::abs(M[i][j]) < best)) {
                    best = std::abs(M[i][j]);
                    pi = i;
                    pj = j;
                }
        if (best == 0) break;
        std::swap(M[pi], M[t]);
        if (pj != t) col_swap(pj, t);
        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
            if (M[i][t] != 0) {
                row_add(i, t, -(M[i][t] / M[t][t]));
                if (M[i][t] != 0) clean = false;
            }
        }
        for (std::size_t j = t + 1; j < n; ++j) {
            if (M[t][j] != 0) {
                col_add(j, t, -(M[t][j] / M[t][t]));
                if (M[t][j] != 0) clean = false;
            }
        }
        if (!clean) continue; // remainders left; repeat with a smaller pivot
        out.diag.push_back(std::abs(M[t][t]));
        ++t;
    }
    out.rank = out.diag.size();
    return out;
}

std::vector<long> mat_vec_right(const std::vector<long>& v, const std::vector<std::vector<long>>& V) {
    std::size_t n = V.size();
    std::vector<long> out(n, 0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) out[j] += v[i] * V[i][j];
    return out;
}

} // namespace

bool in_lattice(const std::vector<std::vector<long>>& lattice, const std::vector<long>& v) {
    std::size_t n = v.size();
    if (lattice.empty()) {
        for (auto x : v)
            if (x != 0) return false;
        return true;
    }
    SNF s = smith(lattice, n);
    std::vector<long> w = mat_vec_right(v, s.V);
    for (std::size_t i = 0; i < n; ++i) {
        if (i < s.rank) {
            if (w[i] % s.diag[i] != 0) return false;
        } else if (w[i] != 0) {
            return false;
        }
    }
    return true;
}

HomologySummary homology_of_quotient(const std::vector<std::vector<long>>& lattice, std::size_t n) {
    HomologySummary h;
    if (lattice.empty()) {
        h.free_rank = static_cast<long>(n);
        return h;
    }
    SNF s = smith(lattice, n);
    h.free_rank = static_cast<long>(n - s.rank);
    for (auto d : s.diag)
        if (d > 1) h.torsion.push_back(d);
    return h;
}

std::vector<long> free_part_image(const std::vector<std::vector<long>>& lattice, std::size_t n,
                                  const std::vector<long>& v) {
    if (lattice.empty()) return v;
    SNF s = smith(lattice, n);
    std::vector<long> w = mat_vec_right(v, s.V);
    return std::vector<long>(w.begin() + static_cast<long>(s.rank), w.end());
}

} // namespace avar
