#include "kisin/affine.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace kisin {

namespace {

long long floordiv(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// residue of v in 1..n
long long res1(long long v, int n) {
    long long r = v % n;
    if (r <= 0) r += n;
    return r;
}

} // namespace

AffinePermutation::AffinePermutation(std::vector<long long> window) : win_(std::move(window)) {
    int n = static_cast<int>(win_.size());
    if (n == 0) throw DimensionMismatch("empty window");
    std::vector<bool> seen(n, false);
    for (long long v : win_) {
        int r = static_cast<int>(res1(v, n)) - 1;
        if (seen[r]) throw Error("InvalidWindow", "window residues are not distinct");
        seen[r] = true;
    }
}

AffinePermutation AffinePermutation::identity(int n) {
    std::vector<long long> w(n);
    std::iota(w.begin(), w.end(), 1);
    return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::translation(const Cochar& lambda) {
    int n = static_cast<int>(lambda.size());
    std::vector<long long> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1 + n * lambda[i];
    return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::finite(const std::vector<int>& w) {
    std::vector<long long> win(w.begin(), w.end());
    return AffinePermutation(std::move(win));
}

AffinePermutation AffinePermutation::from_parts(const Cochar& lambda, const std::vector<int>& w) {
    int n = static_cast<int>(lambda.size());
    if (static_cast<int>(w.size()) != n) throw DimensionMismatch("lambda/w size mismatch");
    std::vector<long long> win(n);
    for (int i = 0; i < n; ++i) win[i] = w[i] + n * lambda[w[i] - 1];
    return AffinePermutation(std::move(win));
}

AffinePermutation AffinePermutation::rho(int n, long long k) {
    std::vector<long long> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1 + k;
    return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::simple_reflection(int n, int i) {
    if (i < 0 || i >= n) throw DimensionMismatch("simple reflection index out of range");
    std::vector<long long> w(n);
    std::iota(w.begin(), w.end(), 1);
    if (i >= 1) {
        std::swap(w[i - 1], w[i]);
    } else {
        // affine s_0: 1 -> 0, n -> n+1
        if (n == 1) throw DimensionMismatch("no affine simple reflection for n = 1");
        w[0] = 0;
        w[n - 1] = n + 1;
    }
    return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::reflection(int n, int i, int j, long long k) {
    if (!(1 <= i && i < j && j <= n)) throw DimensionMismatch("reflection indices out of range");
    std::vector<long long> w(n);
    std::iota(w.begin(), w.end(), 1);
    w[i - 1] = j + k * n;
    w[j - 1] = i - k * n;
    return AffinePermutation(std::move(w));
}

long long AffinePermutation::eval(long long i) const {
    int n = this->n();
    long long r = res1(i, n);
    long long q = (i - r) / n;
    return win_[r - 1] + q * n;
}

AffinePermutation AffinePermutation::operator*(const AffinePermutation& o) const {
    if (n() != o.n()) throw DimensionMismatch("affine permutation sizes differ");
    std::vector<long long> w(n());
    for (int i = 0; i < n(); ++i) w[i] = eval(o.win_[i]);
    return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::inverse() const {
    int n = this->n();
    std::vector<long long> w(n);
    for (int i = 0; i < n; ++i) {
        long long v = win_[i];
        long long r = res1(v, n);
        long long q = (v - r) / n;
        // sigma(i+1) = v = r + qn  =>  sigma^{-1}(r) = i+1 - qn
        w[r - 1] = i + 1 - q * n;
    }
    return AffinePermutation(std::move(w));
}

std::pair<Cochar, std::vector<int>> AffinePermutation::decompose() const {
    int n = this->n();
    Cochar lambda(n, 0);
    std::vector<int> w(n, 0);
    for (int i = 0; i < n; ++i) {
        long long r = res1(win_[i], n);
        w[i] = static_cast<int>(r);
        lambda[r - 1] = (win_[i] - r) / n;
    }
    return {lambda, w};
}

long long AffinePermutation::kottwitz() const {
    long long s = 0;
    for (int i = 0; i < n(); ++i) s += win_[i] - (i + 1);
    return s / n();
}

bool AffinePermutation::is_identity() const {
    for (int i = 0; i < n(); ++i)
        if (win_[i] != i + 1) return false;
    return true;
}

long long AffinePermutation::length() const {
    int n = this->n();
    // periodic inversion count: #{(i, j) : 1 <= i <= n, j > i, sigma(i) > sigma(j)}
    long long inv = 0;
    for (int i = 1; i <= n; ++i) {
        for (int j0 = 1; j0 <= n; ++j0) {
            if (j0 == i) continue;
            long long hi = floordiv(win_[i - 1] - win_[j0 - 1], n);
            long long lo = floordiv(i - j0, n);
            if (hi > lo) inv += hi - lo;
        }
    }
    // closed formula on the (lambda, w) parts
    auto [lambda, w] = decompose();
    std::vector<int> winv(n + 1, 0);
    for (int i = 0; i < n; ++i) winv[w[i]] = i + 1;
    long long im = 0;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            long long d = lambda[i - 1] - lambda[j - 1];
            im += (winv[i] < winv[j]) ? std::llabs(d) : std::llabs(d - 1);
        }
    }
    if (im != inv)
        throw Error("LengthMismatch", "inversion count " + std::to_string(inv) +
                                          " != closed formula " + std::to_string(im));
    return inv;
}

bool AffinePermutation::operator<(const AffinePermutation& o) const {
    if (n() != o.n()) return n() < o.n();
    return win_ < o.win_;
}

std::string AffinePermutation::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n(); ++i) {
        if (i) os << ",";
        os << win_[i];
    }
    os << "]";
    return os.str();
}

namespace {

// Memoized recursive lifting criterion on W_aff (Kottwitz component zero).
struct BruhatCache {
    std::map<std::pair<std::vector<long long>, std::vector<long long>>, bool> memo;
};

bool bruhat_leq_aff(const AffinePermutation& a, const AffinePermutation& b, BruhatCache& cache) {
    if (a == b) return true;
    long long lb = b.length();
    if (lb == 0) return false; // in W_aff only the identity has length 0
    if (a.length() >= lb) return false;
    auto key = std::make_pair(a.window(), b.window());
    auto it = cache.memo.find(key);
    if (it != cache.memo.end()) return it->second;

    int n = a.n();
    bool result = false;
    for (int i = 0; i < n; ++i) {
        AffinePermutation s = AffinePermutation::simple_reflection(n, i);
        AffinePermutation sb = s * b;
        if (sb.length() < lb) {
            AffinePermutation sa = s * a;
            if (sa.length() < a.length())
                result = bruhat_leq_aff(sa, sb, cache);
            else
                result = bruhat_leq_aff(a, sb, cache);
            break;
        }
    }
    cache.memo[key] = result;
    return result;
}

} // namespace

bool bruhat_leq(const AffinePermutation& a, const AffinePermutation& b) {
    if (a.n() != b.n()) throw DimensionMismatch("Bruhat comparison across different n");
    if (a.kottwitz() != b.kottwitz()) return false;
    int n = a.n();
    if (n == 1) return a == b;
    long long k = a.kottwitz();
    AffinePermutation rk = AffinePermutation::rho(n, -k);
    AffinePermutation a0 = a * rk;
    AffinePermutation b0 = b * rk;
    thread_local BruhatCache cache;
    if (cache.memo.size() > 2'000'000) cache.memo.clear();
    return bruhat_leq_aff(a0, b0, cache);
}

PermSet covers_below(const AffinePermutation& w, long long reflection_bound) {
    PermSet out;
    int n = w.n();
    long long lw = w.length();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (long long k = -reflection_bound; k <= reflection_bound; ++k) {
                AffinePermutation u = w * AffinePermutation::reflection(n, i, j, k);
                if (u.length() == lw - 1) out.insert(u);
            }
    return out;
}

std::vector<Cochar> weyl_orbit(const Cochar& lambda) {
    Cochar s = lambda;
    std::sort(s.begin(), s.end());
    std::vector<Cochar> orbit;
    do {
        orbit.push_back(s);
    } while (std::next_permutation(s.begin(), s.end()));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
}

long long translation_length(const Cochar& lambda) {
    return AffinePermutation::translation(lambda).length();
}

PermSet admissible_set(const Cochar& lambda) {
    int n = static_cast<int>(lambda.size());
    auto orbit = weyl_orbit(lambda);
    std::vector<AffinePermutation> translations;
    for (const auto& l : orbit) translations.push_back(AffinePermutation::translation(l));
    long long max_len = translations.front().length();
    long long total = std::accumulate(lambda.begin(), lambda.end(), 0LL);
    long long lo = *std::min_element(lambda.begin(), lambda.end()) - 1;
    long long hi = *std::max_element(lambda.begin(), lambda.end()) + 1;

    PermSet out;
    // enumerate candidate windows t_mu * w with mu in the slack box
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        Cochar mu(n, lo);
        while (true) {
            if (std::accumulate(mu.begin(), mu.end(), 0LL) == total) {
                AffinePermutation cand = AffinePermutation::from_parts(mu, perm);
                if (cand.length() <= max_len) {
                    for (const auto& t : translations) {
                        if (bruhat_leq(cand, t)) {
                            out.insert(cand);
                            break;
                        }
                    }
                }
            }
            int pos = 0;
            while (pos < n && mu[pos] == hi) {
                mu[pos] = lo;
                ++pos;
            }
            if (pos == n) break;
            ++mu[pos];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

BlockPartition::BlockPartition(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    n_ = 0;
    for (size_t b = 0; b < sizes_.size(); ++b) {
        if (sizes_[b] <= 0) throw DimensionMismatch("empty block");
        for (int k = 0; k < sizes_[b]; ++k) block_of_.push_back(static_cast<int>(b));
        n_ += sizes_[b];
    }
}

BlockPartition BlockPartition::singletons(int n) {
    return BlockPartition(std::vector<int>(n, 1));
}

BlockPartition BlockPartition::full(int n) { return BlockPartition({n}); }

bool BlockPartition::is_borel() const {
    return std::all_of(sizes_.begin(), sizes_.end(), [](int s) { return s == 1; });
}

std::vector<int> BlockPartition::simple_positions() const {
    std::vector<int> out;
    for (int i = 1; i < n_; ++i)
        if (block_of_[i - 1] == block_of_[i]) out.push_back(i);
    return out;
}

std::vector<AffinePermutation> BlockPartition::group_elements() const {
    // product over blocks of all permutations within each block
    std::vector<std::vector<int>> elems = {std::vector<int>(n_)};
    std::iota(elems[0].begin(), elems[0].end(), 1);
    int start = 0;
    for (int size : sizes_) {
        std::vector<int> idx(size);
        std::iota(idx.begin(), idx.end(), 0);
        std::vector<std::vector<int>> next;
        do {
            for (const auto& base : elems) {
                std::vector<int> e = base;
                for (int k = 0; k < size; ++k) e[start + k] = start + idx[k] + 1;
                next.push_back(std::move(e));
            }
        } while (std::next_permutation(idx.begin(), idx.end()));
        elems = std::move(next);
        start += size;
    }
    std::vector<AffinePermutation> out;
    out.reserve(elems.size());
    for (const auto& e : elems) out.push_back(AffinePermutation::finite(e));
    return out;
}

AffinePermutation min_double_coset_rep(const AffinePermutation& w, const BlockPartition& blocks) {
    if (w.n() != blocks.n()) throw DimensionMismatch("partition size mismatch");
    AffinePermutation cur = w;
    long long len = cur.length();
    auto simples = blocks.simple_positions();
    bool progress = true;
    while (progress) {
        progress = false;
        for (int i : simples) {
            AffinePermutation s = AffinePermutation::simple_reflection(cur.n(), i);
            AffinePermutation left = s * cur;
            if (left.length() < len) {
                cur = left;
                len = cur.length();
                progress = true;
                break;
            }
            AffinePermutation right = cur * s;
            if (right.length() < len) {
                cur = right;
                len = cur.length();
                progress = true;
                break;
            }
        }
    }
    return cur;
}

PermSet double_coset(const AffinePermutation& w, const BlockPartition& blocks) {
    PermSet out;
    auto wp = blocks.group_elements();
    for (const auto& u : wp)
        for (const auto& v : wp) out.insert(u * w * v);
    return out;
}

long long double_coset_max_length(const AffinePermutation& w, const BlockPartition& blocks) {
    long long best = -1;
    int count = 0;
    for (const auto& x : double_coset(w, blocks)) {
        long long l = x.length();
        if (l > best) {
            best = l;
            count = 1;
        } else if (l == best) {
            ++count;
        }
    }
    if (count != 1)
        throw Error("CosetStructure", "double coset has no unique maximal element");
    return best;
}

PermSet parahoric_admissible_set(const Cochar& lambda, const BlockPartition& blocks) {
    PermSet out;
    for (const auto& a : admissible_set(lambda)) out.insert(min_double_coset_rep(a, blocks));
    return out;
}

bool dominance_leq(Cochar a, Cochar b) {
    if (a.size() != b.size()) throw DimensionMismatch("dominance comparison size mismatch");
    std::sort(a.rbegin(), a.rend());
    std::sort(b.rbegin(), b.rend());
    long long pa = 0, pb = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        pa += a[i];
        pb += b[i];
        if (pa > pb) return false;
    }
    return pa == pb;
}

} // namespace kisin
