#include "wh/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace wh {

namespace {

bool is_odd_prime(int p) {
    if (p < 3 || p % 2 == 0) return false;
    for (int d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

int mod(long x, int p) {
    long r = x % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

int pow_mod(long b, long e, int p) {
    long r = 1;
    b = mod(b, p);
    for (; e > 0; e >>= 1, b = b * b % p)
        if (e & 1) r = r * b % p;
    return static_cast<int>(r);
}

}  // namespace

Genericity genericity_check(int q, const std::vector<std::vector<int>>& eigs, bool strong) {
    if (!is_odd_prime(q)) throw std::invalid_argument("q must be an odd prime");
    std::size_t N = eigs.empty() ? 0 : eigs[0].size();
    for (const auto& t : eigs) {
        if (t.size() != N) throw std::invalid_argument("eigenvalue tuples of different lengths");
        for (int a : t)
            if (mod(a, q) == 0) throw std::invalid_argument("eigenvalue must be nonzero mod q");
    }
    for (std::size_t M = 1; M <= N; ++M) {
        // reachable products after the first j tuples, with one witness each
        std::map<int, std::string> reach{{1, ""}};
        for (std::size_t j = 0; j < eigs.size(); ++j) {
            std::map<int, std::string> local;
            std::vector<int> pick(N, 0);
            std::fill(pick.end() - static_cast<long>(M), pick.end(), 1);
            do {
                std::vector<std::size_t> chosen;
                for (std::size_t i = 0; i < N; ++i)
                    if (pick[i]) chosen.push_back(i);
                for (unsigned signs = 0; signs < (1u << M); ++signs) {
                    long v = 1;
                    std::ostringstream os;
                    os << "j=" << j + 1 << ":";
                    for (std::size_t s = 0; s < M; ++s) {
                        bool neg = (signs >> s) & 1;
                        int a = eigs[j][chosen[s]];
                        v = v * pow_mod(neg ? pow_mod(a, q - 2, q) : a, 2, q) % q;
                        os << (s ? "," : "") << a << "^" << (neg ? "-2" : "2");
                    }
                    local.emplace(static_cast<int>(v), os.str());
                }
            } while (std::next_permutation(pick.begin(), pick.end()));
            std::map<int, std::string> next;
            for (const auto& [x, wx] : reach)
                for (const auto& [y, wy] : local)
                    next.emplace(static_cast<int>(static_cast<long>(x) * y % q), wx + (wx.empty() ? "" : " ") + wy);
            reach = std::move(next);
        }
        for (int bad : {1, q - 1}) {
            if (bad == q - 1 && !strong) break;
            auto it = reach.find(bad);
            if (it != reach.end()) return {false, it->second + " gives " + std::to_string(bad == 1 ? 1 : -1)};
        }
    }
    return {true, ""};
}

// ---------------------------------------------------------------------------

FiniteGL::FiniteGL(int n, int p) : n_(n), p_(p) {
    if (n != 1 && n != 2) throw std::invalid_argument("finite field oracle supports n = 1 or 2");
    if (!is_odd_prime(p)) throw std::invalid_argument("q must be an odd prime");
    inverse_.assign(p, 0);
    for (int a = 1; a < p; ++a) inverse_[a] = pow_mod(a, p - 2, p);
    long codes = n == 1 ? p : static_cast<long>(p) * p * p * p;
    index_.assign(codes, -1);
    if (n == 1) {
        for (int a = 1; a < p; ++a) elems_.push_back({a, 0, 0, 0});
    } else {
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b)
                for (int c = 0; c < p; ++c)
                    for (int d = 0; d < p; ++d)
                        if (mod(static_cast<long>(a) * d - static_cast<long>(b) * c, p) != 0) elems_.push_back({a, b, c, d});
    }
    for (std::size_t i = 0; i < elems_.size(); ++i) index_[code(elems_[i])] = static_cast<long>(i);

    class_key_.assign(n == 1 ? p : 2 * p * p, -1);
    for (const auto& x : elems_) {
        int k = key_id(x);
        if (class_key_[k] < 0) {
            class_key_[k] = static_cast<int>(class_size_.size());
            class_size_.push_back(0);
            class_rep_.push_back(x);
        }
        ++class_size_[class_key_[k]];
    }
}

long FiniteGL::code(const Mat& x) const {
    if (n_ == 1) return x[0];
    return x[0] + p_ * (x[1] + static_cast<long>(p_) * (x[2] + static_cast<long>(p_) * x[3]));
}

long FiniteGL::index_of(const Mat& x) const {
    long i = index_[code(x)];
    if (i < 0) throw std::invalid_argument("matrix is not invertible");
    return i;
}

int FiniteGL::key_id(const Mat& x) const {
    if (n_ == 1) return x[0];
    int tr = mod(x[0] + x[3], p_);
    bool scalar = x[1] == 0 && x[2] == 0 && x[0] == x[3];
    return tr + p_ * (det(x) + p_ * (scalar ? 1 : 0));
}

int FiniteGL::class_of(const Mat& x) const { return class_key_[key_id(x)]; }

FiniteGL::Mat FiniteGL::identity() const { return n_ == 1 ? Mat{1, 0, 0, 0} : Mat{1, 0, 0, 1}; }

int FiniteGL::det(const Mat& x) const {
    if (n_ == 1) return x[0];
    return mod(static_cast<long>(x[0]) * x[3] - static_cast<long>(x[1]) * x[2], p_);
}

FiniteGL::Mat FiniteGL::mul(const Mat& x, const Mat& y) const {
    if (n_ == 1) return {static_cast<int>(static_cast<long>(x[0]) * y[0] % p_), 0, 0, 0};
    auto m = [&](int a, int b, int c, int d) { return mod(static_cast<long>(a) * b + static_cast<long>(c) * d, p_); };
    return {m(x[0], y[0], x[1], y[2]), m(x[0], y[1], x[1], y[3]), m(x[2], y[0], x[3], y[2]), m(x[2], y[1], x[3], y[3])};
}

FiniteGL::Mat FiniteGL::inv(const Mat& x) const {
    int di = inverse_[det(x)];
    if (n_ == 1) return {di, 0, 0, 0};
    auto s = [&](long v) { return mod(v * di, p_); };
    return {s(x[3]), s(-x[1]), s(-x[2]), s(x[0])};
}

FiniteGL::Mat FiniteGL::sigma(const Mat& x) const {
    Mat xi = inv(x);
    if (n_ == 1) return xi;
    Mat xit{xi[0], xi[2], xi[1], xi[3]};
    Mat j{0, 1, p_ - 1, 0}, jinv{0, p_ - 1, 1, 0};
    return mul(mul(j, xit), jinv);
}

FiniteGL::Mat FiniteGL::twisted_rep(const std::vector<int>& eig) const {
    if (static_cast<int>(eig.size()) != n_ / 2) throw std::invalid_argument("eigenvalue tuple must have length n/2");
    if (n_ == 1) return identity();
    int a = mod(eig[0], p_);
    if (a == 0) throw std::invalid_argument("eigenvalue must be nonzero mod q");
    return {a, 0, 0, inverse_[a]};
}

// ---------------------------------------------------------------------------

std::vector<long> twisted_class(const FiniteGL& G, const FiniteGL::Mat& rep, ClassMode mode) {
    std::vector<char> seen(G.order(), 0);
    if (mode == ClassMode::orbit) {
        for (const auto& g : G.elements()) seen[G.index_of(G.mul(G.mul(g, rep), G.inv(G.sigma(g))))] = 1;
    } else {
        int target = G.class_of(G.mul(rep, G.sigma(rep)));
        for (long i = 0; i < G.order(); ++i) {
            const auto& x = G.elements()[i];
            if (G.class_of(G.mul(x, G.sigma(x))) == target) seen[i] = 1;
        }
    }
    std::vector<long> out;
    for (long i = 0; i < G.order(); ++i)
        if (seen[i]) out.push_back(i);
    return out;
}

ClassFunction commutator_counts(const FiniteGL& G) {
    int nc = G.class_count();
    std::vector<long> cent(G.order());
    std::vector<int> inv_class(G.order());
    for (long i = 0; i < G.order(); ++i) {
        const auto& a = G.elements()[i];
        cent[i] = G.centralizer_order(a);
        inv_class[i] = G.class_of(G.inv(a));
    }
    std::vector<long> counts(nc, 0);
#pragma omp parallel for schedule(dynamic)
    for (int c = 0; c < nc; ++c) {
        const auto& x = G.class_rep(c);
        long s = 0;
        for (long i = 0; i < G.order(); ++i) {
            auto ai = G.inv(G.elements()[i]);
            if (G.class_of(G.mul(ai, x)) == inv_class[i]) s += cent[i];
        }
        counts[c] = s;
    }
    ClassFunction f(nc);
    for (int c = 0; c < nc; ++c) f[c] = counts[c];
    return f;
}

ClassFunction convolve(const FiniteGL& G, const ClassFunction& f, const ClassFunction& h) {
    int nc = G.class_count();
    ClassFunction out(nc);
    std::vector<int> inv_class(G.order());
    for (long i = 0; i < G.order(); ++i) inv_class[i] = G.class_of(G.inv(G.elements()[i]));
#pragma omp parallel for schedule(dynamic)
    for (int c = 0; c < nc; ++c) {
        const auto& x = G.class_rep(c);
        std::vector<long> pairs(static_cast<std::size_t>(nc) * nc, 0);
        for (long i = 0; i < G.order(); ++i) {
            const auto& y = G.elements()[i];
            int cz = G.class_of(G.mul(G.inv(y), x));
            ++pairs[static_cast<std::size_t>(G.class_of(y)) * nc + cz];
        }
        Int s = 0;
        for (int a = 0; a < nc; ++a)
            for (int b = 0; b < nc; ++b)
                if (long m = pairs[static_cast<std::size_t>(a) * nc + b]) s += f[a] * h[b] * m;
        out[c] = s;
    }
    return out;
}

namespace {

ClassFunction histogram_to_class_function(const FiniteGL& G, const std::vector<long>& hist) {
    ClassFunction d(G.class_count());
    for (int c = 0; c < G.class_count(); ++c) {
        if (hist[c] % G.class_size(c) != 0) throw MathError("pair distribution is not a class function");
        d[c] = hist[c] / G.class_size(c);
    }
    return d;
}

}  // namespace

ClassFunction pair_distribution_serial(const FiniteGL& G, const std::vector<long>& c1, const std::vector<long>& c2) {
    std::vector<long> hist(G.class_count(), 0);
    std::vector<FiniteGL::Mat> s2;
    for (long j : c2) s2.push_back(G.sigma(G.elements()[j]));
    for (long i : c1)
        for (const auto& y : s2) ++hist[G.class_of(G.mul(G.elements()[i], y))];
    return histogram_to_class_function(G, hist);
}

ClassFunction pair_distribution(const FiniteGL& G, const std::vector<long>& c1, const std::vector<long>& c2) {
    int nc = G.class_count();
    std::vector<long> hist(nc, 0);
    std::vector<FiniteGL::Mat> s2;
    for (long j : c2) s2.push_back(G.sigma(G.elements()[j]));
#pragma omp parallel
    {
        std::vector<long> local(nc, 0);
#pragma omp for schedule(static)
        for (long i = 0; i < static_cast<long>(c1.size()); ++i) {
            const auto& x = G.elements()[c1[i]];
            for (const auto& y : s2) ++local[G.class_of(G.mul(x, y))];
        }
#pragma omp critical
        for (int c = 0; c < nc; ++c) hist[c] += local[c];
    }
    return histogram_to_class_function(G, hist);
}

Int count_solutions(const FiniteGL& G, int g, const std::vector<std::vector<long>>& classes) {
    if (g < 0) throw std::invalid_argument("genus must be nonnegative");
    if (classes.empty() || classes.size() % 2 != 0) throw std::invalid_argument("need an even, nonzero number of classes");
    ClassFunction f(G.class_count());
    int one = G.class_of(G.identity());
    f[one] = 1;
    if (g > 0) {
        ClassFunction comm = commutator_counts(G);
        for (int i = 0; i < g; ++i) f = convolve(G, f, comm);
    }
    for (std::size_t j = 0; j < classes.size(); j += 2) f = convolve(G, f, pair_distribution(G, classes[j], classes[j + 1]));
    return f[one];
}

PointCount count_points(const FiniteGL& G, int g, const std::vector<std::vector<long>>& classes) {
    PointCount r{count_solutions(G, g, classes), 0};
    Int order = G.order();
    if (r.solutions % order != 0) throw MathError("|G| does not divide the number of solutions");
    r.points = r.solutions / order;
    return r;
}

Int count_solutions_direct(const FiniteGL& G, int g, const std::vector<std::vector<long>>& classes) {
    long order = G.order();
    const auto& el = G.elements();
    std::vector<Int> dist(order);
    dist[G.index_of(G.identity())] = 1;
    auto push = [&](const std::vector<long>& weights) {
        std::vector<Int> next(order);
        for (long a = 0; a < order; ++a) {
            if (dist[a] == 0) continue;
            for (long b = 0; b < order; ++b)
                if (weights[b]) next[G.index_of(G.mul(el[a], el[b]))] += dist[a] * weights[b];
        }
        dist = std::move(next);
    };
    for (int i = 0; i < g; ++i) {
        std::vector<long> comm(order, 0);
        for (const auto& a : el)
            for (const auto& b : el) ++comm[G.index_of(G.mul(G.mul(a, b), G.mul(G.inv(a), G.inv(b))))];
        push(comm);
    }
    for (std::size_t j = 0; j + 1 < classes.size(); j += 2) {
        std::vector<long> w(order, 0);
        for (long x : classes[j])
            for (long y : classes[j + 1]) ++w[G.index_of(G.mul(el[x], G.sigma(el[y])))];
        push(w);
    }
    return dist[G.index_of(G.identity())];
}

// ---------------------------------------------------------------------------

Int frobenius_count(const CharTable& t, int g, const std::vector<int>& classes) {
    Rat total = 0;
    for (std::size_t c = 0; c < t.degrees.size(); ++c) {
        Rat deg(t.degrees[c]);
        Rat base = Rat(t.n_order) / deg;
        Rat term = 1;
        int e = 2 * g - 2;
        for (int i = 0; i < std::abs(e); ++i) term *= base;
        if (e < 0) term = 1 / term;
        for (int j : classes) term *= Rat(t.class_sizes.at(j)) * t.ext[c].at(j) / deg;
        total += term;
    }
    total *= Rat(t.n_order);
    total.canonicalize();
    if (total.get_den() != 1) throw MathError("Frobenius count is not an integer: " + total.get_str());
    return total.get_num();
}

CharTable dihedral_table(int m) {
    if (m < 2) throw std::invalid_argument("dihedral group needs m >= 2");
    CharTable t;
    t.n_order = m;
    if (m % 2 == 1) {
        t.class_sizes = {m};
        t.degrees = {1};
        t.ext = {{Rat(1)}};
    } else {
        t.class_sizes = {m / 2, m / 2};
        t.degrees = {1, 1};
        t.ext = {{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}};
    }
    return t;
}

Int dihedral_direct_count(int m, int g, const std::vector<int>& classes) {
    // r^k s^e encoded as e * m + k; (k1, e1)(k2, e2) = (k1 + (-1)^e1 k2, e1 + e2).
    int order = 2 * m;
    auto mul = [&](int x, int y) {
        int k1 = x % m, e1 = x / m, k2 = y % m, e2 = y / m;
        int k = e1 ? k1 - k2 : k1 + k2;
        return ((e1 + e2) % 2) * m + mod(k, m);
    };
    auto inv = [&](int x) {
        for (int y = 0; y < order; ++y)
            if (mul(x, y) == 0) return y;
        throw MathError("no inverse");
    };
    std::vector<std::vector<int>> cls(m % 2 == 1 ? 1 : 2);
    for (int k = 0; k < m; ++k) cls[m % 2 == 1 ? 0 : k % 2].push_back(m + k);
    std::vector<Int> dist(order);
    dist[0] = 1;
    auto push = [&](const std::vector<long>& w) {
        std::vector<Int> next(order);
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b)
                if (w[b]) next[mul(a, b)] += dist[a] * w[b];
        dist = std::move(next);
    };
    for (int i = 0; i < g; ++i) {
        std::vector<long> comm(order, 0);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) ++comm[mul(mul(a, b), mul(inv(a), inv(b)))];
        push(comm);
    }
    for (int c : classes) {
        std::vector<long> w(order, 0);
        for (int x : cls.at(c)) ++w[x];
        push(w);
    }
    return dist[0];
}

// ---------------------------------------------------------------------------

namespace {

using SignedMat = std::vector<std::vector<int>>;

SignedMat smul(const SignedMat& a, const SignedMat& b) {
    std::size_t m = a.size();
    SignedMat c(m, std::vector<int>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k)
            if (a[i][k])
                for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

SignedMat stranspose(const SignedMat& a) {
    std::size_t m = a.size();
    SignedMat t(m, std::vector<int>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) t[j][i] = a[i][j];
    return t;
}

std::vector<SignedMat> hyperoctahedral(int m) {
    std::vector<SignedMat> out;
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (unsigned s = 0; s < (1u << m); ++s) {
            SignedMat x(m, std::vector<int>(m, 0));
            for (int i = 0; i < m; ++i) x[perm[i]][i] = (s >> i) & 1 ? -1 : 1;
            out.push_back(x);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

SignedMat class_representative(const BiPartition& beta) {
    int m = beta.size();
    SignedMat x(m, std::vector<int>(m, 0));
    int pos = 0;
    auto place = [&](int r, bool negative) {
        for (int i = 0; i < r; ++i) x[pos + (i + 1) % r][pos + i] = (negative && i == 0) ? -1 : 1;
        pos += r;
    };
    for (int r : beta.first.parts()) place(r, false);
    for (int r : beta.second.parts()) place(r, true);
    return x;
}

// Induced from the block subgroup with blocks `sizes`; the linear character
// is the product of signs on blocks flagged in `twisted`.
Rat induced_value(const std::vector<SignedMat>& group, const SignedMat& x, const std::vector<int>& sizes,
                  const std::vector<bool>& twisted) {
    std::vector<int> block;
    for (std::size_t b = 0; b < sizes.size(); ++b)
        for (int i = 0; i < sizes[b]; ++i) block.push_back(static_cast<int>(b));
    long sum = 0;
    for (const auto& y : group) {
        SignedMat z = smul(smul(y, x), stranspose(y));
        int value = 1;
        bool inside = true;
        for (std::size_t i = 0; i < z.size() && inside; ++i)
            for (std::size_t j = 0; j < z.size(); ++j)
                if (z[i][j]) {
                    if (block[i] != block[j]) {
                        inside = false;
                        break;
                    }
                    if (twisted[block[i]]) value *= z[i][j];
                }
        if (inside) sum += value;
    }
    Int sub = 1;
    for (int s : sizes)
        for (int i = 1; i <= s; ++i) sub *= 2 * i;
    return Rat(Int(sum)) / Rat(sub);
}

// Jacobi-Trudi: s_lambda = sum_w sgn(w) h_(lambda_i - i + w(i)).
std::vector<std::pair<int, std::vector<int>>> jacobi_trudi(const Partition& lambda) {
    int l = lambda.length();
    std::vector<int> w(l);
    std::iota(w.begin(), w.end(), 0);
    std::vector<std::pair<int, std::vector<int>>> out;
    do {
        std::vector<int> comp;
        bool ok = true;
        for (int i = 0; i < l; ++i) {
            int part = lambda[i] - i + w[i];
            if (part < 0) ok = false;
            if (part > 0) comp.push_back(part);
        }
        if (!ok) continue;
        int inversions = 0;
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j)
                if (w[i] > w[j]) ++inversions;
        out.push_back({inversions % 2 ? -1 : 1, comp});
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

}  // namespace

Int wreath_group_char(const BiPartition& alpha, const BiPartition& beta) {
    int m = alpha.size();
    if (beta.size() != m) throw std::invalid_argument("character of mismatched sizes");
    if (m > 4) throw std::invalid_argument("brute-force wreath characters need m <= 4");
    if (m == 0) return 1;
    auto group = hyperoctahedral(m);
    SignedMat x = class_representative(beta);
    Rat total = 0;
    for (const auto& [s0, c0] : jacobi_trudi(alpha.first))
        for (const auto& [s1, c1] : jacobi_trudi(alpha.second)) {
            std::vector<int> sizes = c0;
            sizes.insert(sizes.end(), c1.begin(), c1.end());
            std::vector<bool> twisted(c0.size(), false);
            twisted.resize(sizes.size(), true);
            total += Rat(s0 * s1) * induced_value(group, x, sizes, twisted);
        }
    total.canonicalize();
    if (total.get_den() != 1) throw MathError("non-integral character value");
    return total.get_num();
}

}  // namespace wh
