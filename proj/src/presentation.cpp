#include "solvrep/presentation.hpp"

#include "solvrep/rational.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace solvrep {

// ---------------------------------------------------------------------------
// parsing
// ---------------------------------------------------------------------------

std::size_t LongPresentation::index_of(const std::string& symbol) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i].symbol == symbol) return i;
    return static_cast<std::size_t>(-1);
}

namespace {

[[noreturn]] void syntax_error(std::size_t line, std::size_t col, const std::string& what) {
    throw SyntaxError("line " + std::to_string(line) + ", column " + std::to_string(col) +
                      ": " + what);
}

struct Token {
    std::string text;
    std::size_t col;
};

std::vector<Token> tokenize_line(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
               line[i] != '#')
            ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

// Parses "sym" or "sym^k" against the declared generators.
std::pair<std::size_t, long> parse_letter(const LongPresentation& lp, const Token& tok,
                                          std::size_t line) {
    std::string sym = tok.text;
    long exp = 1;
    if (auto pos = tok.text.find('^'); pos != std::string::npos) {
        sym = tok.text.substr(0, pos);
        std::string e = tok.text.substr(pos + 1);
        try {
            std::size_t used = 0;
            exp = std::stol(e, &used);
            if (used != e.size()) throw std::invalid_argument(e);
        } catch (const std::exception&) {
            syntax_error(line, tok.col, "malformed exponent '" + e + "'");
        }
    }
    std::size_t idx = lp.index_of(sym);
    if (idx == static_cast<std::size_t>(-1))
        syntax_error(line, tok.col, "unknown generator '" + sym + "'");
    return {idx, exp};
}

Word parse_word_tokens(const LongPresentation& lp, const std::vector<Token>& toks,
                       std::size_t first, std::size_t line) {
    Word w;
    if (toks.size() == first + 1 && toks[first].text == "1") return w;
    for (std::size_t t = first; t < toks.size(); ++t)
        w.letters.push_back(parse_letter(lp, toks[t], line));
    return w;
}

} // namespace

Word LongPresentation::parse_word(const std::string& text) const {
    auto toks = tokenize_line(text);
    if (toks.empty()) syntax_error(1, 1, "empty word");
    return parse_word_tokens(*this, toks, 0, 1);
}

LongPresentation parse_presentation(const std::string& text) {
    LongPresentation lp;
    bool saw_group = false;
    std::vector<bool> has_pow;
    std::vector<std::vector<bool>> has_conj;

    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto toks = tokenize_line(raw);
        if (toks.empty()) continue;
        const std::string& head = toks[0].text;

        if (head == "group") {
            if (saw_group) syntax_error(lineno, toks[0].col, "duplicate group line");
            if (toks.size() != 2) syntax_error(lineno, toks[0].col, "expected: group <name>");
            lp.name = toks[1].text;
            saw_group = true;
        } else if (head == "gen") {
            if (!saw_group) syntax_error(lineno, toks[0].col, "gen before group line");
            if (toks.size() != 4 || toks[2].text != "prime")
                syntax_error(lineno, toks[0].col, "expected: gen <symbol> prime <p>");
            if (lp.index_of(toks[1].text) != static_cast<std::size_t>(-1))
                syntax_error(lineno, toks[1].col, "duplicate generator '" + toks[1].text + "'");
            std::uint64_t p = 0;
            try {
                p = std::stoull(toks[3].text);
            } catch (const std::exception&) {
                syntax_error(lineno, toks[3].col, "malformed prime '" + toks[3].text + "'");
            }
            if (!is_prime_u64(p))
                syntax_error(lineno, toks[3].col,
                             "declared order " + toks[3].text + " is not prime");
            lp.generators.push_back({toks[1].text, p});
            lp.power_words.emplace_back();
            lp.conj_words.emplace_back(lp.generators.size() - 1);
            for (std::size_t j = 0; j + 1 < lp.generators.size(); ++j) {
                // default conjugation is trivial: x_i^-1 x_j x_i = x_j
                lp.conj_words.back()[j].letters = {{j, 1}};
            }
            has_pow.push_back(false);
            has_conj.emplace_back(lp.generators.size() - 1, false);
        } else if (head == "pow") {
            if (toks.size() < 4 || toks[2].text != "=")
                syntax_error(lineno, toks[0].col, "expected: pow <symbol> = <word>");
            std::size_t i = lp.index_of(toks[1].text);
            if (i == static_cast<std::size_t>(-1))
                syntax_error(lineno, toks[1].col, "unknown generator '" + toks[1].text + "'");
            if (has_pow[i]) syntax_error(lineno, toks[1].col, "duplicate pow relation");
            Word w = parse_word_tokens(lp, toks, 3, lineno);
            for (auto& [gi, e] : w.letters)
                if (gi >= i)
                    syntax_error(lineno, toks[3].col,
                                 "power relation for '" + lp.generators[i].symbol +
                                     "' references generator of index >= its own");
            lp.power_words[i] = std::move(w);
            has_pow[i] = true;
        } else if (head == "conj") {
            if (toks.size() < 5 || toks[3].text != "=")
                syntax_error(lineno, toks[0].col, "expected: conj <xi> <xj> = <word>");
            std::size_t i = lp.index_of(toks[1].text);
            if (i == static_cast<std::size_t>(-1))
                syntax_error(lineno, toks[1].col, "unknown generator '" + toks[1].text + "'");
            std::size_t j = lp.index_of(toks[2].text);
            if (j == static_cast<std::size_t>(-1))
                syntax_error(lineno, toks[2].col, "unknown generator '" + toks[2].text + "'");
            if (j >= i)
                syntax_error(lineno, toks[2].col,
                             "conj requires index(" + toks[2].text + ") < index(" +
                                 toks[1].text + ")");
            if (has_conj[i][j]) syntax_error(lineno, toks[1].col, "duplicate conj relation");
            Word w = parse_word_tokens(lp, toks, 4, lineno);
            for (auto& [gi, e] : w.letters)
                if (gi >= i)
                    syntax_error(lineno, toks[4].col,
                                 "conj relation for '" + lp.generators[i].symbol +
                                     "' references generator of index >= its own");
            lp.conj_words[i][j] = std::move(w);
            has_conj[i][j] = true;
        } else {
            syntax_error(lineno, toks[0].col, "unknown directive '" + head + "'");
        }
    }

    if (!saw_group) throw SyntaxError("line 1, column 1: missing group line");
    if (lp.generators.empty()) throw SyntaxError("line 1, column 1: no generators declared");
    for (std::size_t i = 0; i < lp.generators.size(); ++i)
        if (!has_pow[i])
            throw SyntaxError("missing pow relation for generator '" +
                              lp.generators[i].symbol + "'");
    return lp;
}

LongPresentation parse_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SyntaxError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str());
}

// ---------------------------------------------------------------------------
// validation / table construction
// ---------------------------------------------------------------------------

namespace {

// Per-level helper working on level-local indices.
struct LevelTable {
    std::size_t n = 1;                // order of this level
    std::vector<std::uint32_t> mul;   // n*n

    std::size_t prod(std::size_t a, std::size_t b) const { return mul[a * n + b]; }

    std::size_t inverse(std::size_t a) const {
        for (std::size_t b = 0; b < n; ++b)
            if (prod(a, b) == 0) return b;
        throw InconsistentPresentation("element without inverse in level table");
    }

    std::size_t power(std::size_t a, long k) const {
        if (k < 0) return power(inverse(a), -k);
        std::size_t acc = 0;
        for (long t = 0; t < k; ++t) acc = prod(acc, a);
        return acc;
    }
};

} // namespace

ValidationReport validate(const LongPresentation& lp, const ValidationOptions& opts) {
    const std::size_t n = lp.size();
    std::uint64_t order = 1;
    for (const auto& g : lp.generators) {
        order *= g.prime;
        if (order > opts.max_order)
            throw SizeExceeded("group order exceeds configured bound of " +
                               std::to_string(opts.max_order));
    }

    // Strides for the lexicographic ranking of exponent vectors.
    std::vector<std::size_t> level_stride(n + 1, 1);
    for (std::size_t k = n; k-- > 0;)
        level_stride[k] = level_stride[k + 1] * lp.generators[k].prime;

    // Build level tables bottom-up.  Level k has order prod_{i<k} p_i and
    // its local index of x_1^(a_1)..x_k^(a_k) is the base-(p_i) Horner rank,
    // which matches the full-group rank scaled by level_stride[k].
    LevelTable prev;
    prev.mul = {0};
    for (std::size_t lev = 0; lev < n; ++lev) {
        const std::size_t p = static_cast<std::size_t>(lp.generators[lev].prime);
        const std::size_t m = prev.n;

        auto norm_prev = [&](const Word& w) {
            std::size_t acc = 0;
            for (auto [gi, e] : w.letters) {
                // generator x_(gi+1) has local rank = prod of primes in (gi, lev)
                std::size_t g = 1;
                for (std::size_t t = gi + 1; t < lev; ++t)
                    g *= static_cast<std::size_t>(lp.generators[t].prime);
                acc = prev.prod(acc, prev.power(g, e));
            }
            return acc;
        };

        // Conjugation action of the new generator on the previous level,
        // extended multiplicatively from the stored generator images.
        std::vector<std::uint32_t> phi(m);
        {
            std::vector<std::size_t> gen_image(lev);
            for (std::size_t j = 0; j < lev; ++j) gen_image[j] = norm_prev(lp.conj_words[lev][j]);
            for (std::size_t u = 0; u < m; ++u) {
                std::size_t acc = 0, rest = u;
                // decode u most-significant first
                std::size_t strides = m;
                for (std::size_t j = 0; j < lev; ++j) {
                    strides /= static_cast<std::size_t>(lp.generators[j].prime);
                    std::size_t aj = rest / strides;
                    rest %= strides;
                    acc = prev.prod(acc, prev.power(gen_image[j], static_cast<long>(aj)));
                }
                phi[u] = static_cast<std::uint32_t>(acc);
            }
            std::vector<bool> seen(m, false);
            for (auto v : phi) {
                if (seen[v])
                    throw InconsistentPresentation(
                        "conjugation by '" + lp.generators[lev].symbol +
                        "' does not permute the preceding subgroup (colliding normal forms)");
                seen[v] = true;
            }
        }
        std::vector<std::uint32_t> psi(m); // phi^-1: moves the new generator leftwards
        for (std::size_t u = 0; u < m; ++u) psi[phi[u]] = static_cast<std::uint32_t>(u);

        std::vector<std::vector<std::uint32_t>> psi_pow(p, std::vector<std::uint32_t>(m));
        for (std::size_t u = 0; u < m; ++u) psi_pow[0][u] = static_cast<std::uint32_t>(u);
        for (std::size_t k = 1; k < p; ++k)
            for (std::size_t u = 0; u < m; ++u) psi_pow[k][u] = psi[psi_pow[k - 1][u]];

        const std::size_t w_pow = norm_prev(lp.power_words[lev]);

        LevelTable cur;
        cur.n = m * p;
        cur.mul.assign(cur.n * cur.n, 0);
        for (std::size_t u = 0; u < m; ++u) {
            for (std::size_t k = 0; k < p; ++k) {
                const std::size_t a = u * p + k;
                for (std::size_t v = 0; v < m; ++v) {
                    for (std::size_t l = 0; l < p; ++l) {
                        std::size_t base = prev.prod(u, psi_pow[k][v]);
                        std::size_t kl = k + l;
                        if (kl >= p) {
                            base = prev.prod(base, w_pow);
                            kl -= p;
                        }
                        cur.mul[a * cur.n + v * p + l] =
                            static_cast<std::uint32_t>(base * p + kl);
                    }
                }
            }
        }
        prev = std::move(cur);
    }

    auto group = std::shared_ptr<Group>(new Group());
    Group& G = *group;
    G.lp_ = lp;
    G.order_ = prev.n;
    G.table_ = std::move(prev.mul);
    G.primes_.resize(n);
    for (std::size_t i = 0; i < n; ++i) G.primes_[i] = lp.generators[i].prime;
    G.stride_ = level_stride;

    // Latin square: every row and column is a permutation.
    {
        const std::size_t N = G.order_;
        std::vector<bool> seen(N);
        for (std::size_t a = 0; a < N; ++a) {
            std::fill(seen.begin(), seen.end(), false);
            for (std::size_t b = 0; b < N; ++b) {
                std::size_t v = G.mul(a, b);
                if (v >= N || seen[v])
                    throw InconsistentPresentation("multiplication table is not a Latin square");
                seen[v] = true;
            }
            std::fill(seen.begin(), seen.end(), false);
            for (std::size_t b = 0; b < N; ++b) {
                std::size_t v = G.mul(b, a);
                if (seen[v])
                    throw InconsistentPresentation("multiplication table is not a Latin square");
                seen[v] = true;
            }
        }
    }

    // Inverses and element orders.
    G.inv_.assign(G.order_, 0);
    G.elem_order_.assign(G.order_, 0);
    for (std::size_t a = 0; a < G.order_; ++a) {
        bool found = false;
        for (std::size_t b = 0; b < G.order_; ++b) {
            if (G.mul(a, b) == 0) {
                if (G.mul(b, a) != 0)
                    throw InconsistentPresentation("one-sided inverse in table");
                G.inv_[a] = static_cast<std::uint32_t>(b);
                found = true;
                break;
            }
        }
        if (!found) throw InconsistentPresentation("element without inverse");
        std::uint64_t ord = 1;
        std::size_t acc = a;
        while (acc != 0) {
            acc = G.mul(acc, a);
            ++ord;
        }
        G.elem_order_[a] = static_cast<std::uint32_t>(ord);
    }
    G.exponent_ = 1;
    for (auto o : G.elem_order_) G.exponent_ = lcm_u64(G.exponent_, o);

    // Defining relations hold in the table.
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t xi = G.generator(i);
        std::size_t lhs = G.power(xi, static_cast<long>(G.primes_[i]));
        if (lhs != G.normalize(lp.power_words[i]))
            throw InconsistentPresentation("power relation fails for generator '" +
                                           lp.generators[i].symbol + "'");
        for (std::size_t j = 0; j < i; ++j) {
            std::size_t conj = G.mul(G.mul(G.inv(xi), G.generator(j)), xi);
            if (conj != G.normalize(lp.conj_words[i][j]))
                throw InconsistentPresentation("conjugation relation fails for pair (" +
                                               lp.generators[i].symbol + ", " +
                                               lp.generators[j].symbol + ")");
        }
    }

    // Associativity: exhaustive up to the cap, deterministic sample beyond.
    std::uint64_t checked = 0;
    {
        const std::uint64_t N = G.order_;
        const std::uint64_t total = N * N * N;
        if (total <= opts.associativity_cap) {
            for (std::size_t a = 0; a < N; ++a)
                for (std::size_t b = 0; b < N; ++b)
                    for (std::size_t c = 0; c < N; ++c) {
                        if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c)))
                            throw InconsistentPresentation("associativity fails");
                        ++checked;
                    }
        } else {
            std::uint64_t state = 0x9e3779b97f4a7c15ull;
            for (std::uint64_t t = 0; t < opts.associativity_cap; ++t) {
                state = state * 6364136223846793005ull + 1442695040888963407ull;
                std::size_t a = static_cast<std::size_t>((state >> 33) % N);
                state = state * 6364136223846793005ull + 1442695040888963407ull;
                std::size_t b = static_cast<std::size_t>((state >> 33) % N);
                state = state * 6364136223846793005ull + 1442695040888963407ull;
                std::size_t c = static_cast<std::size_t>((state >> 33) % N);
                if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c)))
                    throw InconsistentPresentation("associativity fails");
                ++checked;
            }
        }
    }

    G.abelian_ = true;
    for (std::size_t i = 0; i < n && G.abelian_; ++i)
        for (std::size_t j = 0; j < i && G.abelian_; ++j)
            if (G.mul(G.generator(i), G.generator(j)) != G.mul(G.generator(j), G.generator(i)))
                G.abelian_ = false;

    // Abelianization once, via Smith reduction of the relation matrix.
    G.ab_ = [&] {
        Group::Abelianization ab;
        const std::size_t cols = n;
        std::vector<std::vector<Integer>> A;
        auto word_exps = [&](const Word& w) {
            std::vector<Integer> v(cols, Integer(0));
            for (auto [gi, e] : w.letters) v[gi] += e;
            return v;
        };
        for (std::size_t i = 0; i < n; ++i) {
            // p_i * e_i - exps(w_i)
            auto w = word_exps(lp.power_words[i]);
            std::vector<Integer> row(cols, Integer(0));
            for (std::size_t c = 0; c < cols; ++c) row[c] = -w[c];
            row[i] += Integer(G.primes_[i]);
            A.push_back(std::move(row));
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) {
                auto w = word_exps(lp.conj_words[i][j]);
                std::vector<Integer> row(cols, Integer(0));
                for (std::size_t c = 0; c < cols; ++c) row[c] = -w[c];
                row[j] += 1; // e_j - exps(w_ij)
                A.push_back(row);
            }

        // Smith reduction tracking only the column transform V.
        const std::size_t rows = A.size();
        std::vector<std::vector<Integer>> V(cols, std::vector<Integer>(cols, Integer(0)));
        for (std::size_t i = 0; i < cols; ++i) V[i][i] = 1;

        auto col_add = [&](std::size_t dst, std::size_t src, const Integer& q) {
            for (std::size_t r = 0; r < rows; ++r) A[r][dst] += q * A[r][src];
            for (std::size_t r = 0; r < cols; ++r) V[r][dst] += q * V[r][src];
        };
        auto col_swap = [&](std::size_t a, std::size_t b) {
            for (std::size_t r = 0; r < rows; ++r) std::swap(A[r][a], A[r][b]);
            for (std::size_t r = 0; r < cols; ++r) std::swap(V[r][a], V[r][b]);
        };
        auto col_neg = [&](std::size_t c) {
            for (std::size_t r = 0; r < rows; ++r) A[r][c] = -A[r][c];
            for (std::size_t r = 0; r < cols; ++r) V[r][c] = -V[r][c];
        };
        auto row_add = [&](std::size_t dst, std::size_t src, const Integer& q) {
            for (std::size_t c = 0; c < cols; ++c) A[dst][c] += q * A[src][c];
        };

        const std::size_t steps = std::min(rows, cols);
        for (std::size_t t = 0; t < steps; ++t) {
            while (true) {
                // locate minimal nonzero entry in the remaining block
                std::size_t bi = rows, bj = cols;
                for (std::size_t i = t; i < rows; ++i)
                    for (std::size_t j = t; j < cols; ++j)
                        if (A[i][j] != 0 &&
                            (bi == rows || abs(A[i][j]) < abs(A[bi][bj])))
                            bi = i, bj = j;
                if (bi == rows) break; // block is zero
                if (bi != t) std::swap(A[bi], A[t]);
                if (bj != t) col_swap(bj, t);
                if (A[t][t] < 0) col_neg(t);

                bool reduced = true;
                for (std::size_t i = t + 1; i < rows; ++i) {
                    if (A[i][t] == 0) continue;
                    Integer q = A[i][t] / A[t][t];
                    row_add(i, t, -q);
                    if (A[i][t] != 0) reduced = false;
                }
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (A[t][j] == 0) continue;
                    Integer q = A[t][j] / A[t][t];
                    col_add(j, t, -q);
                    if (A[t][j] != 0) reduced = false;
                }
                if (!reduced) continue;

                // divisibility: every remaining entry must be divisible
                bool divides = true;
                for (std::size_t i = t + 1; i < rows && divides; ++i)
                    for (std::size_t j = t + 1; j < cols && divides; ++j)
                        if (A[i][j] % A[t][t] != 0) {
                            row_add(t, i, Integer(1));
                            divides = false;
                        }
                if (divides) break;
            }
        }

        std::vector<std::uint64_t> diag(cols, 0);
        for (std::size_t j = 0; j < steps; ++j) {
            Integer d = abs(A[j][j]);
            diag[j] = d.get_ui();
        }
        // Finite quotient: zero diagonal entries cannot occur.
        for (std::size_t j = 0; j < cols; ++j)
            if (diag[j] == 0) throw InconsistentPresentation("infinite abelianization");

        std::vector<std::size_t> keep;
        for (std::size_t j = 0; j < cols; ++j)
            if (diag[j] > 1) keep.push_back(j);
        for (auto j : keep) ab.invariant_factors.push_back(diag[j]);

        ab.image.resize(G.order_);
        for (std::size_t g = 0; g < G.order_; ++g) {
            GroupElement e = G.element(g);
            std::vector<std::uint64_t> img;
            for (auto j : keep) {
                Integer s(0);
                for (std::size_t c = 0; c < cols; ++c) s += Integer(e.exps[c]) * V[c][j];
                Integer d(static_cast<unsigned long>(diag[j]));
                Integer r = s % d;
                if (r < 0) r += d;
                img.push_back(mpz_get_ui(r.get_mpz_t()));
            }
            ab.image[g] = std::move(img);
        }
        return ab;
    }();

    ValidationReport report;
    report.order = G.order_;
    report.exponent = G.exponent_;
    report.associativity_triples_checked = checked;
    report.group = group;
    return report;
}

ValidationReport load_group_file(const std::string& path, const ValidationOptions& opts) {
    return validate(parse_presentation_file(path), opts);
}

// ---------------------------------------------------------------------------
// Group queries
// ---------------------------------------------------------------------------

std::size_t Group::generator(std::size_t i) const { return stride_[i + 1]; }

std::size_t Group::power(std::size_t a, long k) const {
    if (k < 0) return power(inv_[a], -k);
    std::size_t acc = 0;
    std::size_t sq = a;
    unsigned long e = static_cast<unsigned long>(k);
    while (e) {
        if (e & 1) acc = mul(acc, sq);
        e >>= 1;
        if (e) sq = mul(sq, sq);
    }
    return acc;
}

std::size_t Group::conjugate(std::size_t a, std::size_t g) const {
    return mul(mul(inv(g), a), g);
}

GroupElement Group::element(std::size_t idx) const {
    GroupElement e;
    e.exps.resize(lp_.size());
    for (std::size_t i = 0; i < lp_.size(); ++i)
        e.exps[i] = static_cast<int>((idx / stride_[i + 1]) % primes_[i]);
    return e;
}

std::size_t Group::index_of(const GroupElement& e) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < lp_.size(); ++i)
        idx += static_cast<std::size_t>(e.exps[i]) * stride_[i + 1];
    return idx;
}

std::size_t Group::normalize(const Word& w) const {
    std::size_t acc = 0;
    for (auto [gi, e] : w.letters) acc = mul(acc, power(generator(gi), e));
    return acc;
}

std::string Group::element_word(std::size_t idx) const {
    GroupElement e = element(idx);
    std::string out;
    for (std::size_t i = 0; i < e.exps.size(); ++i) {
        if (e.exps[i] == 0) continue;
        if (!out.empty()) out += ' ';
        out += lp_.generators[i].symbol;
        if (e.exps[i] > 1) out += "^" + std::to_string(e.exps[i]);
    }
    return out.empty() ? "1" : out;
}

std::uint64_t Group::level_order(std::size_t k) const { return order_ / stride_[k]; }

bool Group::in_level(std::size_t idx, std::size_t k) const { return idx % stride_[k] == 0; }

std::vector<std::size_t> Group::level_elements(std::size_t k) const {
    std::vector<std::size_t> out;
    out.reserve(level_order(k));
    for (std::size_t idx = 0; idx < order_; idx += stride_[k]) out.push_back(idx);
    return out;
}

std::vector<std::vector<std::size_t>> Group::conjugacy_classes(std::size_t level) const {
    auto elems = level_elements(level);
    std::vector<bool> seen(order_, false);
    std::vector<std::vector<std::size_t>> classes;
    for (auto a : elems) {
        if (seen[a]) continue;
        std::set<std::size_t> cls;
        for (auto g : elems) cls.insert(conjugate(a, g));
        std::vector<std::size_t> v(cls.begin(), cls.end());
        for (auto x : v) seen[x] = true;
        classes.push_back(std::move(v));
    }
    return classes;
}

std::vector<std::size_t> Group::derived_subgroup() const {
    std::set<std::size_t> s;
    s.insert(0);
    for (std::size_t a = 0; a < order_; ++a)
        for (std::size_t b = 0; b < order_; ++b)
            s.insert(mul(mul(inv(a), inv(b)), mul(a, b)));
    // close under products (inverses follow in a finite group)
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::size_t> cur(s.begin(), s.end());
        for (auto a : cur)
            for (auto b : cur)
                if (s.insert(mul(a, b)).second) grew = true;
    }
    return {s.begin(), s.end()};
}

std::vector<Group::CyclicKernel> Group::cyclic_quotient_kernels() const {
    if (!abelian_) throw NotAbelian("cyclic quotient kernels require an abelian group");
    const auto& factors = ab_.invariant_factors;

    std::vector<CyclicKernel> out;
    std::set<std::vector<std::size_t>> seen_kernels;
    for (std::uint64_t d = 1; d <= order_; ++d) {
        if (order_ % d != 0) continue;
        // homomorphisms to Z/d: component j maps to a multiple of d/gcd(d, f_j)
        std::vector<std::uint64_t> step(factors.size()), count(factors.size());
        for (std::size_t j = 0; j < factors.size(); ++j) {
            std::uint64_t g = gcd_u64(d, factors[j]);
            step[j] = d / g;
            count[j] = g;
        }
        std::vector<std::uint64_t> t(factors.size(), 0);
        bool more = true;
        while (more) {
            std::vector<std::uint64_t> c(factors.size());
            for (std::size_t j = 0; j < factors.size(); ++j) c[j] = t[j] * step[j];
            std::uint64_t g = d;
            for (auto x : c) g = gcd_u64(g, x);
            bool surjective = (d == 1) || (gcd_u64(g, d) == 1);
            if (surjective) {
                std::vector<std::uint64_t> value(order_);
                std::vector<std::size_t> kernel;
                for (std::size_t e = 0; e < order_; ++e) {
                    std::uint64_t v = 0;
                    for (std::size_t j = 0; j < factors.size(); ++j)
                        v = (v + c[j] * (ab_.image[e][j] % d)) % d;
                    value[e] = v;
                    if (v == 0) kernel.push_back(e);
                }
                if (!seen_kernels.count(kernel)) {
                    seen_kernels.insert(kernel);
                    CyclicKernel ck;
                    ck.kernel = kernel;
                    ck.d = d;
                    ck.coset_generator = 0;
                    for (std::size_t e = 0; e < order_; ++e)
                        if (gcd_u64(value[e], d) == 1 || d == 1) {
                            ck.coset_generator = e;
                            break;
                        }
                    // re-express values as powers of the chosen generator
                    std::uint64_t u = value[ck.coset_generator];
                    std::uint64_t uinv = (d == 1) ? 0 : inverse_mod(u, d);
                    ck.power_of.resize(order_);
                    for (std::size_t e = 0; e < order_; ++e)
                        ck.power_of[e] = (d == 1) ? 0 : (value[e] * uinv) % d;
                    out.push_back(std::move(ck));
                }
            }
            if (factors.empty()) break;
            more = false;
            for (std::size_t j = factors.size(); j-- > 0;) {
                if (++t[j] < count[j]) {
                    more = true;
                    break;
                }
                t[j] = 0;
            }
        }
    }
    return out;
}

} // namespace solvrep
