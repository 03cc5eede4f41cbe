#include "rr/semigroup.hpp"

#include <algorithm>
#include <numeric>

#include "rr/errors.hpp"

namespace rr {

std::vector<Int> lambda_table(const std::vector<Int>& coins, Int hi) {
    std::vector<Int> table(static_cast<std::size_t>(hi) + 1, -1);
    table[0] = 0;
    for (Int n = 1; n <= hi; ++n) {
        Int best = -1;
        for (Int c : coins) {
            if (c <= 0 || c > n) continue;
            Int prev = table[static_cast<std::size_t>(n - c)];
            if (prev < 0) continue;
            if (best < 0 || prev + 1 < best) best = prev + 1;
        }
        table[static_cast<std::size_t>(n)] = best;
    }
    return table;
}

NumericalSemigroup::NumericalSemigroup(std::vector<Int> raw) {
    std::erase_if(raw, [](Int g) { return g <= 0; });
    if (raw.empty()) throw EmptySemigroup();
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

    // Ascending sweep keeps a generator only if the ones already kept
    // cannot represent it; this yields the minimal generating set.
    for (Int g : raw) {
        if (!gens_.empty()) {
            auto table = lambda_table(gens_, g);
            if (table[static_cast<std::size_t>(g)] >= 0) continue;
        }
        gens_.push_back(g);
    }
    h_ = 0;
    for (Int g : gens_) h_ = std::gcd(h_, g);
    lam_ = {0};
}

NumericalSemigroup::NumericalSemigroup(const NumericalSemigroup& o) {
    std::lock_guard<std::mutex> lk(o.mu_);
    gens_ = o.gens_;
    h_ = o.h_;
    lam_ = o.lam_;
    frob_ = o.frob_;
}

NumericalSemigroup& NumericalSemigroup::operator=(const NumericalSemigroup& o) {
    if (this == &o) return *this;
    std::scoped_lock lk(mu_, o.mu_);
    gens_ = o.gens_;
    h_ = o.h_;
    lam_ = o.lam_;
    frob_ = o.frob_;
    return *this;
}

void NumericalSemigroup::ensure_locked(Int hi) const {
    Int cur = static_cast<Int>(lam_.size());
    if (cur > hi) return;
    lam_.resize(static_cast<std::size_t>(hi) + 1, -1);
    for (Int n = cur; n <= hi; ++n) {
        Int best = -1;
        for (Int g : gens_) {
            if (g > n) break;
            Int prev = lam_[static_cast<std::size_t>(n - g)];
            if (prev < 0) continue;
            if (best < 0 || prev + 1 < best) best = prev + 1;
        }
        lam_[static_cast<std::size_t>(n)] = best;
    }
}

bool NumericalSemigroup::contains(Int n) const {
    if (n < 0) return false;
    std::lock_guard<std::mutex> lk(mu_);
    ensure_locked(n);
    return lam_[static_cast<std::size_t>(n)] >= 0;
}

Int NumericalSemigroup::lambda_min(Int s) const {
    if (s < 0) throw NotAMember(s);
    std::lock_guard<std::mutex> lk(mu_);
    ensure_locked(s);
    Int v = lam_[static_cast<std::size_t>(s)];
    if (v < 0) throw NotAMember(s);
    return v;
}

std::vector<Int> NumericalSemigroup::min_representation(Int s) const {
    if (s < 0) throw NotAMember(s);
    std::lock_guard<std::mutex> lk(mu_);
    ensure_locked(s);
    if (lam_[static_cast<std::size_t>(s)] < 0) throw NotAMember(s);

    std::vector<Int> out(gens_.size(), 0);
    Int cur = s;
    while (cur > 0) {
        // Peel off the largest generator that stays on an optimal path.
        for (std::size_t i = gens_.size(); i-- > 0;) {
            Int g = gens_[i];
            if (g > cur) continue;
            Int prev = lam_[static_cast<std::size_t>(cur - g)];
            if (prev >= 0 && prev == lam_[static_cast<std::size_t>(cur)] - 1) {
                ++out[i];
                cur -= g;
                break;
            }
        }
    }
    return out;
}

std::vector<Int> NumericalSemigroup::representation_with_total(Int s, Int l) const {
    if (l < 0 || s < 0 || !contains(s) || lambda_min(s) > l)
        throw NoRepresentation(s, l);
    std::vector<Int> rep = min_representation(s);
    Int used = std::accumulate(rep.begin(), rep.end(), Int{0});
    std::vector<Int> out;
    out.reserve(rep.size() + 1);
    out.push_back(l - used);
    out.insert(out.end(), rep.begin(), rep.end());
    return out;
}

Int NumericalSemigroup::frobenius_locked() const {
    if (frob_ != kFrobUnset) return frob_;
    // Work in the scaled semigroup S/h (gcd 1, so cofinite) and sweep
    // until a_1/h consecutive integers are members; every later integer
    // is then a member too.
    std::vector<Int> scaled;
    scaled.reserve(gens_.size());
    for (Int g : gens_) scaled.push_back(g / h_);
    Int a1 = scaled.front();
    Int limit = scaled.front() * scaled.back() + a1 + 2;
    auto table = lambda_table(scaled, limit);
    Int run = 0, last_non = -1;
    for (Int n = 0; n <= limit; ++n) {
        if (table[static_cast<std::size_t>(n)] >= 0) {
            if (++run >= a1) break;
        } else {
            last_non = n;
            run = 0;
        }
    }
    frob_ = (last_non >= 0) ? last_non * h_ : -h_;
    return frob_;
}

Int NumericalSemigroup::frobenius() const {
    std::lock_guard<std::mutex> lk(mu_);
    return frobenius_locked();
}

Int NumericalSemigroup::big_lambda() const {
    std::lock_guard<std::mutex> lk(mu_);
    Int hi = frobenius_locked() + gens_.back();
    ensure_locked(hi);
    Int best = 0;
    for (Int s = 0; s <= hi; ++s)
        best = std::max(best, lam_[static_cast<std::size_t>(s)]);
    return best;
}

Int NumericalSemigroup::bound_L(const Rational& alpha, const Rational& beta) const {
    if (alpha >= Rational(1) || alpha < Rational(0)) throw AlphaOutOfRange();
    if (beta < Rational(0)) throw BadParameters("bound_L: beta must be >= 0");
    Rational ar(gens_.back());
    Rational val = (ar * Rational(big_lambda()) + beta - Rational(frobenius() + 1)) /
                   (ar * (Rational(1) - alpha));
    return std::max<Int>(0, rational_ceil(val));
}

}  // namespace rr
