#include "lenscert/fgroup.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace lenscert {

std::string_view convention_name(IndexConvention c) {
    switch (c) {
        case IndexConvention::hinv_c_minus_h: return "h'c-h";
        case IndexConvention::neg_hinv_c_minus_hinv: return "-h'c-h'";
        case IndexConvention::hinv_c_minus_hinv: return "h'c-h'";
        case IndexConvention::neg_hinv_c_minus_h: return "-h'c-h";
    }
    return "unknown";
}

int delta_h(Int k, Int p, Int h) {
    Int r = reduce_mod(k, p).value;
    return (r >= 1 && r <= h) ? 1 : 0;
}

GroupPresentation build_presentation(Int p, Int q, Int h, const ReducedVector& reduced, IndexConvention convention) {
    if (gcd(p, q) != 1 || gcd(p, h) != 1) throw std::invalid_argument("build_presentation: need gcd(p,q) = gcd(p,h) = 1");
    const Int hr = reduce_mod(h, p).value;
    const Int hinv = p == 1 ? 1 : mod_inverse(hr, p).value;
    const Int c = reduce_mod(((hr + 1 + p) * (hr - 1)) / 2, p).value;

    Int index = 0;
    switch (convention) {
        case IndexConvention::hinv_c_minus_h: index = hinv * c - hr; break;
        case IndexConvention::neg_hinv_c_minus_hinv: index = -hinv * c - hinv; break;
        case IndexConvention::hinv_c_minus_hinv: index = hinv * c - hinv; break;
        case IndexConvention::neg_hinv_c_minus_h: index = -hinv * c - hr; break;
    }
    const Int e = reduced[index];

    auto syllable = [&](Word& w, Int i) {
        w.push_back(1);
        if (delta_h(q * i + 1, p, hr)) w.push_back(2);
    };
    GroupPresentation pres;
    Word r1, r2;
    for (Int i = 1; i <= p; ++i) syllable(r1, i);
    for (Int i = 1; i <= hinv - 1; ++i) syllable(r2, i);
    r2.push_back(1);
    for (Int k = 0; k < (e < 0 ? -e : e); ++k) r2.push_back(e > 0 ? -2 : 2);
    pres.relators = {std::move(r1), std::move(r2)};
    return pres;
}

GroupPresentation build_presentation(const Certificate& cert, IndexConvention convention) {
    return build_presentation(cert.datum.p, cert.lens_q, cert.class_h, cert.reduced, convention);
}

GroupPresentation binary_icosahedral_presentation() {
    // (xy)^2 x^-3 and x^3 y^-5
    return {2, {{1, 2, 1, 2, -1, -1, -1}, {1, 1, 1, -2, -2, -2, -2, -2}}};
}

Word reduce_word(const Word& w) {
    Word out;
    for (int x : w) {
        if (!out.empty() && out.back() == -x) out.pop_back();
        else out.push_back(x);
    }
    return out;
}

Word cyclically_reduce(const Word& w) {
    Word r = reduce_word(w);
    std::size_t lo = 0, hi = r.size();
    while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
        ++lo;
        --hi;
    }
    return Word(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word rotate_word(const Word& w, std::size_t shift) {
    if (w.empty()) return w;
    Word out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[(i + shift) % w.size()];
    return out;
}

Word invert_word(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (int& x : out) x = -x;
    return out;
}

std::string format_presentation(const GroupPresentation& pres) {
    std::ostringstream os;
    for (const auto& r : pres.relators) {
        if (r.empty()) os << '1';
        for (int x : r) {
            switch (x) {
                case 1: os << 'a'; break;
                case -1: os << 'A'; break;
                case 2: os << 'b'; break;
                case -2: os << 'B'; break;
                default: throw std::invalid_argument("format_presentation: letter out of range");
            }
        }
        os << '\n';
    }
    return os.str();
}

GroupPresentation parse_presentation(const std::string& text) {
    GroupPresentation pres;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        Word w;
        if (line != "1") {
            for (char ch : line) {
                switch (ch) {
                    case 'a': w.push_back(1); break;
                    case 'A': w.push_back(-1); break;
                    case 'b': w.push_back(2); break;
                    case 'B': w.push_back(-2); break;
                    default: throw std::invalid_argument(std::string("parse_presentation: unexpected '") + ch + "'");
                }
            }
        }
        pres.relators.push_back(std::move(w));
    }
    return pres;
}

Int abelianization_order(const GroupPresentation& pres) {
    if (pres.generators != 2 || pres.relators.size() != 2)
        throw std::invalid_argument("abelianization_order: expects two generators and two relators");
    Int m[2][2] = {{0, 0}, {0, 0}};
    for (std::size_t r = 0; r < 2; ++r)
        for (int x : pres.relators[r]) m[r][(x < 0 ? -x : x) - 1] += x > 0 ? 1 : -1;
    Int det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    return det < 0 ? -det : det;
}

namespace {

// Columns: generator g (1-based) maps to 2(g-1), its inverse to 2(g-1)+1.
int column(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }
int inverse_column(int col) { return col ^ 1; }

class CosetEnumerator {
public:
    CosetEnumerator(const GroupPresentation& pres, const std::vector<Word>& subgroup, Int max_cosets)
        : ncols_(2 * pres.generators), max_cosets_(max_cosets), by_first_(static_cast<std::size_t>(2 * pres.generators)) {
        for (const auto& w : subgroup) {
            Word r = reduce_word(w);
            if (r.empty()) continue;
            std::vector<int> cols;
            for (int x : r) cols.push_back(column(x));
            subgroup_.push_back(std::move(cols));
        }
        for (const auto& r : pres.relators) {
            Word w = cyclically_reduce(r);
            if (w.empty()) continue;
            for (const Word& v : {w, invert_word(w)}) {
                std::vector<int> cols;
                for (int x : v) cols.push_back(column(x));
                words_.push_back(std::move(cols));
            }
        }
        for (std::size_t k = 0; k < words_.size(); ++k)
            for (std::size_t s = 0; s < words_[k].size(); ++s)
                by_first_[static_cast<std::size_t>(words_[k][s])].push_back({k, s});
    }

    EnumerationResult run() {
        new_coset();
        for (std::size_t k = 0; k < subgroup_.size(); ++k) {
            if (!fill_subgroup_word(k)) return {false, 0, count()};
            process_deductions();
        }
        for (std::int64_t alpha = 0; alpha < count(); ++alpha) {
            for (int x = 0; x < ncols_; ++x) {
                if (!live(alpha)) break;
                if (entry(alpha, x) >= 0) continue;
                if (count() >= max_cosets_) return {false, 0, count()};
                define(alpha, x);
                process_deductions();
            }
        }
        Int live_count = 0;
        for (std::int64_t a = 0; a < count(); ++a) live_count += live(a) ? 1 : 0;
        return {true, live_count, count()};
    }

private:
    struct Conjugate {
        std::size_t word;
        std::size_t start;
    };

    std::int64_t count() const { return static_cast<std::int64_t>(parent_.size()); }
    bool live(std::int64_t a) const { return parent_[static_cast<std::size_t>(a)] == a; }
    std::int64_t& entry(std::int64_t a, int x) { return table_[static_cast<std::size_t>(a * ncols_ + x)]; }

    std::int64_t new_coset() {
        std::int64_t b = count();
        parent_.push_back(b);
        table_.insert(table_.end(), static_cast<std::size_t>(ncols_), -1);
        return b;
    }

    void define(std::int64_t a, int x) {
        std::int64_t b = new_coset();
        entry(a, x) = b;
        entry(b, inverse_column(x)) = a;
        deductions_.push_back({a, x});
    }

    std::int64_t rep(std::int64_t k) {
        std::int64_t root = k;
        while (parent_[static_cast<std::size_t>(root)] != root) root = parent_[static_cast<std::size_t>(root)];
        while (parent_[static_cast<std::size_t>(k)] != root) {
            std::int64_t next = parent_[static_cast<std::size_t>(k)];
            parent_[static_cast<std::size_t>(k)] = root;
            k = next;
        }
        return root;
    }

    void merge(std::int64_t k, std::int64_t l, std::vector<std::int64_t>& queue) {
        std::int64_t a = rep(k), b = rep(l);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent_[static_cast<std::size_t>(b)] = a;
        queue.push_back(b);
    }

    void coincidence(std::int64_t a, std::int64_t b) {
        std::vector<std::int64_t> queue;
        merge(a, b, queue);
        for (std::size_t i = 0; i < queue.size(); ++i) {
            const std::int64_t g = queue[i];
            for (int x = 0; x < ncols_; ++x) {
                std::int64_t d = entry(g, x);
                if (d < 0) continue;
                const int xi = inverse_column(x);
                if (entry(d, xi) == g) entry(d, xi) = -1;
                std::int64_t mu = rep(g), nu = rep(d);
                if (entry(mu, x) >= 0) {
                    merge(nu, entry(mu, x), queue);
                } else if (entry(nu, xi) >= 0) {
                    merge(mu, entry(nu, xi), queue);
                } else {
                    entry(mu, x) = nu;
                    entry(nu, xi) = mu;
                    deductions_.push_back({mu, x});
                }
            }
        }
    }

    // Traces subgroup word k from coset 0, defining cosets until one letter is left, then closes it.
    bool fill_subgroup_word(std::size_t k) {
        const auto& w = subgroup_[k];
        std::int64_t f = rep(0);
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (entry(f, w[i]) < 0) {
                if (count() >= max_cosets_) return false;
                define(f, w[i]);
            }
            f = rep(entry(f, w[i]));
        }
        scan_word(0, w, 0);
        return true;
    }

    void scan(std::int64_t alpha, const Conjugate& c) { scan_word(alpha, words_[c.word], c.start); }

    void scan_word(std::int64_t alpha, const std::vector<int>& w, std::size_t start) {
        const Conjugate c{0, start};
        const std::size_t n = w.size();
        auto letter = [&](std::size_t i) { return w[(c.start + i) % n]; };
        std::int64_t f = alpha, b = alpha;
        std::size_t i = 0, j = n;  // unscanned letters are [i, j)
        while (i < j) {
            std::int64_t nxt = entry(f, letter(i));
            if (nxt < 0) break;
            f = nxt;
            ++i;
        }
        if (i == j) {
            if (f != alpha) coincidence(f, alpha);
            return;
        }
        while (j > i) {
            std::int64_t nxt = entry(b, inverse_column(letter(j - 1)));
            if (nxt < 0) break;
            b = nxt;
            --j;
        }
        if (j == i) {
            coincidence(f, b);
        } else if (j == i + 1) {
            const int x = letter(i);
            entry(f, x) = b;
            entry(b, inverse_column(x)) = f;
            deductions_.push_back({f, x});
        }
    }

    void process_deductions() {
        while (!deductions_.empty()) {
            auto [a, x] = deductions_.back();
            deductions_.pop_back();
            for (const auto& w : subgroup_) scan_word(0, w, 0);
            if (!live(a)) continue;
            for (const auto& c : by_first_[static_cast<std::size_t>(x)]) {
                scan(a, c);
                if (!live(a)) break;
            }
            if (!live(a)) continue;
            std::int64_t b = entry(a, x);
            if (b < 0 || !live(b)) continue;
            for (const auto& c : by_first_[static_cast<std::size_t>(inverse_column(x))]) {
                scan(b, c);
                if (!live(b)) break;
            }
        }
    }

    int ncols_;
    Int max_cosets_;
    std::vector<std::vector<int>> words_;
    std::vector<std::vector<Conjugate>> by_first_;
    std::vector<std::vector<int>> subgroup_;
    std::vector<std::int64_t> table_;
    std::vector<std::int64_t> parent_;
    std::vector<std::pair<std::int64_t, int>> deductions_;
};

}  // namespace

EnumerationResult todd_coxeter(const GroupPresentation& pres, Int max_cosets) {
    return coset_index(pres, {}, max_cosets);
}

EnumerationResult coset_index(const GroupPresentation& pres, const std::vector<Word>& subgroup, Int max_cosets) {
    if (max_cosets < 1) throw std::invalid_argument("todd_coxeter: max_cosets must be positive");
    if (pres.generators < 1) throw std::invalid_argument("todd_coxeter: need at least one generator");
    for (const auto& w : subgroup)
        for (int x : w)
            if (x == 0 || x > pres.generators || -x > pres.generators)
                throw std::invalid_argument("coset_index: subgroup letter out of range");
    return CosetEnumerator(pres, subgroup, max_cosets).run();
}

namespace {

std::size_t common_prefix(const Word& u, std::size_t su, const Word& v, std::size_t sv, std::size_t cap) {
    std::size_t k = 0;
    while (k < cap && u[(su + k) % u.size()] == v[(sv + k) % v.size()]) ++k;
    return k;
}

// Shortens v using u when some cyclic rotation of u (or u^-1) shares a prefix longer than |u|/2
// with a rotation of v.
bool shorten_with(const Word& u, Word& v) {
    if (u.empty() || v.empty()) return false;
    const std::size_t cap = std::min(u.size(), v.size());
    for (const Word& w : {u, invert_word(u)}) {
        for (std::size_t su = 0; su < w.size(); ++su) {
            for (std::size_t sv = 0; sv < v.size(); ++sv) {
                const std::size_t len = common_prefix(w, su, v, sv, cap);
                if (2 * len <= w.size()) continue;
                Word repl;
                for (std::size_t k = w.size(); k > len; --k) repl.push_back(-w[(su + k - 1) % w.size()]);
                for (std::size_t k = len; k < v.size(); ++k) repl.push_back(v[(sv + k) % v.size()]);
                repl = cyclically_reduce(repl);
                if (repl.size() < v.size()) {
                    v = std::move(repl);
                    return true;
                }
            }
        }
    }
    return false;
}

}  // namespace

GroupPresentation simplify_relators(const GroupPresentation& pres) {
    GroupPresentation out = pres;
    for (auto& r : out.relators) r = cyclically_reduce(r);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < out.relators.size(); ++i)
            for (std::size_t j = 0; j < out.relators.size(); ++j)
                if (i != j && out.relators[i].size() <= out.relators[j].size() &&
                    shorten_with(out.relators[i], out.relators[j]))
                    changed = true;
    }
    return out;
}

EnumerationResult group_order(const GroupPresentation& input, Int max_cosets) {
    const Int ab = abelianization_order(input);
    const GroupPresentation pres = simplify_relators(input);
    if (ab != 0 && pres.generators == 2) {
        for (int g = 1; g <= pres.generators; ++g) {
            EnumerationResult r = coset_index(pres, {Word{g}}, max_cosets);
            if (r.closed && r.order == 1) return {true, ab, r.cosets_defined};
        }
    }
    return todd_coxeter(pres, max_cosets);
}

}  // namespace lenscert
