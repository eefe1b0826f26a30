#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "meixner/combinat.hpp"
#include "meixner/weyl_expr.hpp"

namespace meixner {

/// Normal-ordered element sum c_{jk} U^j V^k, keyed by (j,k). Zero
/// coefficients are never stored.
struct NormalForm {
    std::map<std::pair<unsigned, unsigned>, GaussRational> terms;

    void add(unsigned j, unsigned k, const GaussRational& c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(j, k);
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    GaussRational coeff(unsigned j, unsigned k) const {
        auto it = terms.find({j, k});
        return it == terms.end() ? GaussRational{0} : it->second;
    }

    friend bool operator==(const NormalForm& a, const NormalForm& b) { return a.terms == b.terms; }

    static NormalForm identity() {
        NormalForm nf;
        nf.add(0, 0, GaussRational{1});
        return nf;
    }
};

/// Terms as "U^jV^k:c" lines, sorted by (j,k) descending.
inline std::vector<std::string> format_normal_form(const NormalForm& nf) {
    std::vector<std::string> lines;
    for (auto it = nf.terms.rbegin(); it != nf.terms.rend(); ++it) {
        auto [j, k] = it->first;
        std::string head;
        if (j > 0) head += "U^" + std::to_string(j);
        if (k > 0) head += "V^" + std::to_string(k);
        if (head.empty()) head = "1";
        lines.push_back(head + ":" + to_string(it->second));
    }
    if (lines.empty()) lines.push_back("0");
    return lines;
}

/// Chooses which of the current word's inversions ("VU" occurrences, byte
/// positions given) to rewrite next. The default picks the leftmost one;
/// randomized strategies are used to exercise confluence.
using RewriteStrategy = std::function<std::size_t(const std::string&, const std::vector<std::size_t>&)>;

inline std::size_t leftmost_strategy(const std::string&, const std::vector<std::size_t>&) {
    return 0;
}

namespace detail {

using WordSum = std::map<std::string, GaussRational>;

inline void word_add(WordSum& m, const std::string& w, const GaussRational& c) {
    if (c.is_zero()) return;
    auto it = m.find(w);
    if (it == m.end()) {
        m.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
}

/// Expands the AST into a linear combination of words over {U,V}.
inline WordSum expand_words(const OperatorExpr& e) {
    switch (e.kind) {
        case OperatorExpr::Kind::GenU: return {{"U", GaussRational{1}}};
        case OperatorExpr::Kind::GenV: return {{"V", GaussRational{1}}};
        case OperatorExpr::Kind::Scalar: return {{"", e.scalar}};
        case OperatorExpr::Kind::Sum: {
            WordSum out;
            for (const auto& kid : e.kids)
                for (auto& [w, c] : expand_words(*kid)) word_add(out, w, c);
            return out;
        }
        case OperatorExpr::Kind::Product: {
            WordSum acc{{"", GaussRational{1}}};
            for (const auto& kid : e.kids) {
                WordSum next;
                WordSum rhs = expand_words(*kid);
                for (const auto& [wa, ca] : acc)
                    for (const auto& [wb, cb] : rhs) word_add(next, wa + wb, ca * cb);
                acc = std::move(next);
            }
            return acc;
        }
        case OperatorExpr::Kind::Power: {
            WordSum base = expand_words(*e.kids[0]);
            WordSum acc{{"", GaussRational{1}}};
            for (unsigned i = 0; i < e.exponent; ++i) {
                WordSum next;
                for (const auto& [wa, ca] : acc)
                    for (const auto& [wb, cb] : base) word_add(next, wa + wb, ca * cb);
                acc = std::move(next);
            }
            return acc;
        }
    }
    throw std::logic_error("expand_words: bad node");
}

inline std::vector<std::size_t> inversions(const std::string& w) {
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == 'V' && w[i + 1] == 'U') pos.push_back(i);
    return pos;
}

}  // namespace detail

/// Normal-orders a linear combination of words under [V,U] = aV + b by
/// repeatedly applying the rewrite VU -> UV + aV + b. Each application
/// either reduces the number of (V,U) inversions or shortens the word, so
/// the procedure terminates; the result is independent of the strategy.
inline NormalForm normal_order_words(detail::WordSum work, const GaussRational& a,
                                     const GaussRational& b,
                                     const RewriteStrategy& strategy = leftmost_strategy) {
    NormalForm out;
    while (!work.empty()) {
        auto it = work.begin();
        std::string w = it->first;
        GaussRational c = it->second;
        work.erase(it);
        auto pos = detail::inversions(w);
        if (pos.empty()) {
            unsigned j = 0;
            while (j < w.size() && w[j] == 'U') ++j;
            out.add(j, static_cast<unsigned>(w.size() - j), c);
            continue;
        }
        std::size_t p = pos[strategy(w, pos) % pos.size()];
        std::string swapped = w;
        swapped[p] = 'U';
        swapped[p + 1] = 'V';
        std::string keep_v = w.substr(0, p + 1) + w.substr(p + 2);  // drop the U
        std::string drop_both = w.substr(0, p) + w.substr(p + 2);
        detail::word_add(work, swapped, c);
        detail::word_add(work, keep_v, c * a);
        detail::word_add(work, drop_both, c * b);
    }
    return out;
}

inline NormalForm normal_order(const OperatorExpr& e, const GaussRational& a,
                               const GaussRational& b,
                               const RewriteStrategy& strategy = leftmost_strategy) {
    return normal_order_words(detail::expand_words(e), a, b, strategy);
}

/// (UV)^n = sum_{k=1}^n b^{n-k} S(n,k) (U|-a)_k V^k, with the generalized
/// factorial (U|-a)_k = U(U+a)...(U+(k-1)a) expanded into U-powers.
/// n = 0 yields the identity.
inline NormalForm uv_power_closed_form(unsigned n, const GaussRational& a,
                                       const GaussRational& b) {
    if (n == 0) return NormalForm::identity();
    NormalForm nf;
    for (unsigned k = 1; k <= n; ++k) {
        GaussRational w = pow_n(b, n - k) * GaussRational{Rat(stirling2(n, k))};
        if (w.is_zero()) continue;
        std::vector<GaussRational> ucoef{GaussRational{1}};  // polynomial in U
        for (unsigned j = 0; j < k; ++j) {
            std::vector<GaussRational> next(ucoef.size() + 1);
            GaussRational shift = GaussRational{Rat(j)} * a;
            for (std::size_t m = 0; m < ucoef.size(); ++m) {
                next[m + 1] += ucoef[m];
                next[m] += shift * ucoef[m];
            }
            ucoef = std::move(next);
        }
        for (std::size_t m = 0; m < ucoef.size(); ++m)
            nf.add(static_cast<unsigned>(m), k, w * ucoef[m]);
    }
    return nf;
}

/// Checks V^n U = (U + na) V^n + nb V^{n-1} through the rewriting engine.
inline bool vn_u_relation_check(unsigned n, const GaussRational& a, const GaussRational& b) {
    if (n == 0) return true;
    detail::WordSum word{{std::string(n, 'V') + "U", GaussRational{1}}};
    NormalForm got = normal_order_words(std::move(word), a, b);
    NormalForm expect;
    expect.add(1, n, GaussRational{1});
    expect.add(0, n, GaussRational{Rat(n)} * a);
    expect.add(0, n - 1, GaussRational{Rat(n)} * b);
    return got == expect;
}

}  // namespace meixner
