#include "wh/symfunc.hpp"

#include <mutex>
#include <sstream>

namespace wh {

void SymFunc1::add(const Partition& key, const RatFun& c) {
    if (c.is_zero()) return;
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

RatFun SymFunc1::coeff(const Partition& key) const {
    auto it = terms.find(key);
    return it == terms.end() ? RatFun(vars) : it->second;
}

void SymFunc2::add(const BiPartition& key, const RatFun& c) {
    if (c.is_zero()) return;
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

RatFun SymFunc2::coeff(const BiPartition& key) const {
    auto it = terms.find(key);
    return it == terms.end() ? RatFun(vars) : it->second;
}

Matrix2 matrix2(const RatFun& a, const RatFun& b, const RatFun& c, const RatFun& d) {
    return Matrix2{{{a, b}, {c, d}}};
}

Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
    Matrix2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
    return r;
}

Matrix2 inverse(const Matrix2& m) {
    RatFun det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (det.is_zero()) throw MathError("singular 2x2 matrix");
    RatFun inv = det.inverse();
    return matrix2(m[1][1] * inv, -(m[0][1] * inv), -(m[1][0] * inv), m[0][0] * inv);
}

namespace {

std::vector<int> merged(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Partition union_of(const Partition& a, const Partition& b) { return Partition(merged(a.parts(), b.parts())); }

Int mn_char(std::vector<int> beads, const std::vector<int>& rho, std::size_t pos) {
    if (pos == rho.size()) return 1;
    int k = rho[pos];
    Int total = 0;
    for (std::size_t i = 0; i < beads.size(); ++i) {
        int b = beads[i];
        int target = b - k;
        if (target < 0) continue;
        if (std::find(beads.begin(), beads.end(), target) != beads.end()) continue;
        int between = 0;
        for (int x : beads)
            if (x > target && x < b) ++between;
        std::vector<int> next = beads;
        next[i] = target;
        Int v = mn_char(std::move(next), rho, pos + 1);
        total += (between % 2 == 0) ? v : Int(-v);
    }
    return total;
}

std::mutex char_mutex;

// Rational Gauss-Jordan inverse of a small dense matrix.
std::vector<std::vector<Rat>> invert(std::vector<std::vector<Rat>> a) {
    std::size_t n = a.size();
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(a[p][c]) == 0) ++p;
        if (p == n) throw MathError("singular transition matrix");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Rat piv = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || sgn(a[i][c]) == 0) continue;
            Rat f = a[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

using Dense = std::vector<std::vector<Rat>>;

struct Trans1 {
    const std::vector<Partition>* parts = nullptr;
    std::map<Partition, int> index;
    // Rows: source basis element, columns: target basis element.
    Dense s2p, p2s, h2s, s2h, m2s, s2m;
};

std::mutex trans_mutex;

const Trans1& trans1(int n) {
    static std::map<int, Trans1> cache;
    {
        std::lock_guard<std::mutex> lock(trans_mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    Trans1 t;
    t.parts = &partitions_of(n);
    const auto& ps = *t.parts;
    std::size_t k = ps.size();
    for (std::size_t i = 0; i < k; ++i) t.index[ps[i]] = static_cast<int>(i);
    t.s2p.assign(k, std::vector<Rat>(k, 0));
    t.p2s.assign(k, std::vector<Rat>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Int chi = sn_char(ps[i], ps[j]);
            t.p2s[j][i] = chi;
            t.s2p[i][j] = Rat(chi) / Rat(z_lambda(ps[j]));
        }
    // h_mu in the power basis by multiplying h_m = sum p_rho / z_rho.
    Dense h2p(k, std::vector<Rat>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        std::map<Partition, Rat> cur{{Partition(), Rat(1)}};
        for (int m : ps[i].parts()) {
            std::map<Partition, Rat> next;
            for (const auto& [key, c] : cur)
                for (const auto& rho : partitions_of(m)) next[union_of(key, rho)] += c / Rat(z_lambda(rho));
            cur = std::move(next);
        }
        for (const auto& [key, c] : cur) h2p[i][t.index.at(key)] = c;
    }
    t.h2s.assign(k, std::vector<Rat>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t l = 0; l < k; ++l) t.h2s[i][l] += h2p[i][j] * t.p2s[j][l];
    t.s2h = invert(t.h2s);
    // s_lambda = sum_mu K_{lambda mu} m_mu with K_{lambda mu} = <s_lambda, h_mu>.
    t.s2m.assign(k, std::vector<Rat>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) t.s2m[i][j] = t.h2s[j][i];
    t.m2s = invert(t.s2m);
    std::lock_guard<std::mutex> lock(trans_mutex);
    return cache.emplace(n, std::move(t)).first->second;
}

const Dense& to_schur_matrix(const Trans1& t, Basis1 b) {
    switch (b) {
        case Basis1::power: return t.p2s;
        case Basis1::complete: return t.h2s;
        case Basis1::monomial: return t.m2s;
        default: throw MathError("no matrix for schur basis");
    }
}

const Dense& from_schur_matrix(const Trans1& t, Basis1 b) {
    switch (b) {
        case Basis1::power: return t.s2p;
        case Basis1::complete: return t.s2h;
        case Basis1::monomial: return t.s2m;
        default: throw MathError("no matrix for schur basis");
    }
}

SymFunc1 apply_dense(const SymFunc1& f, Basis1 target, const std::function<const Dense&(const Trans1&)>& pick) {
    SymFunc1 r(target, f.vars);
    for (const auto& [key, c] : f.terms) {
        const Trans1& t = trans1(key.size());
        const Dense& m = pick(t);
        int i = t.index.at(key);
        for (std::size_t j = 0; j < m[i].size(); ++j)
            if (sgn(m[i][j]) != 0) r.add((*t.parts)[j], c.scaled(m[i][j]));
    }
    return r;
}

// Expansion of wreath power sums in the power2 basis and back.
using SparseRow = std::vector<std::pair<BiPartition, Rat>>;

SparseRow expand_signed(const BiPartition& key, bool to_power2) {
    // to_power2: p0_r = p_r(x0) + p_r(x1), p1_r = p_r(x0) - p_r(x1).
    // otherwise: p_r(x0) = (p0_r + p1_r)/2, p_r(x1) = (p0_r - p1_r)/2.
    std::map<BiPartition, Rat> cur{{BiPartition{}, Rat(1)}};
    auto push = [&](int r, bool second_slot) {
        std::map<BiPartition, Rat> next;
        Rat half = to_power2 ? Rat(1) : Rat(1, 2);
        Rat s = second_slot ? Rat(-1) : Rat(1);
        for (const auto& [k, c] : cur) {
            BiPartition a{union_of(k.first, Partition{r}), k.second};
            BiPartition b{k.first, union_of(k.second, Partition{r})};
            next[a] += c * half;
            next[b] += c * half * s;
        }
        cur = std::move(next);
    };
    for (int r : key.first.parts()) push(r, false);
    for (int r : key.second.parts()) push(r, true);
    SparseRow out;
    for (const auto& [k, c] : cur)
        if (sgn(c) != 0) out.emplace_back(k, c);
    return out;
}

SymFunc2 wreath_to_power2(const SymFunc2& f) {
    SymFunc2 r(Basis2::power2, f.vars);
    for (const auto& [key, c] : f.terms)
        for (const auto& [k, x] : expand_signed(key, true)) r.add(k, c.scaled(x));
    return r;
}

SymFunc2 power2_to_wreath(const SymFunc2& f) {
    SymFunc2 r(Basis2::wreath_power, f.vars);
    for (const auto& [key, c] : f.terms)
        for (const auto& [k, x] : expand_signed(key, false)) r.add(k, c.scaled(x));
    return r;
}

// Tensor product of one-alphabet transitions.
SymFunc2 tensor_apply(const SymFunc2& f, Basis2 target, bool schur_to_power) {
    SymFunc2 r(target, f.vars);
    for (const auto& [key, c] : f.terms) {
        const Trans1& t0 = trans1(key.first.size());
        const Trans1& t1 = trans1(key.second.size());
        const Dense& m0 = schur_to_power ? t0.s2p : t0.p2s;
        const Dense& m1 = schur_to_power ? t1.s2p : t1.p2s;
        int i0 = t0.index.at(key.first), i1 = t1.index.at(key.second);
        for (std::size_t j0 = 0; j0 < m0[i0].size(); ++j0) {
            if (sgn(m0[i0][j0]) == 0) continue;
            for (std::size_t j1 = 0; j1 < m1[i1].size(); ++j1) {
                if (sgn(m1[i1][j1]) == 0) continue;
                r.add({(*t0.parts)[j0], (*t1.parts)[j1]}, c.scaled(m0[i0][j0] * m1[i1][j1]));
            }
        }
    }
    return r;
}

}  // namespace

Int sn_char(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size()) throw std::invalid_argument("character of mismatched sizes");
    static std::map<std::pair<Partition, Partition>, Int> cache;
    {
        std::lock_guard<std::mutex> lock(char_mutex);
        auto it = cache.find({lambda, rho});
        if (it != cache.end()) return it->second;
    }
    int r = lambda.length();
    std::vector<int> beads(r);
    for (int i = 0; i < r; ++i) beads[i] = lambda[i] + r - 1 - i;
    Int v = mn_char(beads, rho.parts(), 0);
    std::lock_guard<std::mutex> lock(char_mutex);
    cache.emplace(std::make_pair(lambda, rho), v);
    return v;
}

SymFunc1 schur1(const Partition& lambda, Vars v) {
    SymFunc1 f(Basis1::schur, v);
    f.add(lambda, RatFun::constant(1, v));
    return f;
}

SymFunc1 power1(const Partition& lambda, Vars v) {
    SymFunc1 f(Basis1::power, v);
    f.add(lambda, RatFun::constant(1, v));
    return f;
}

SymFunc1 complete1(const Partition& lambda, Vars v) {
    SymFunc1 f(Basis1::complete, v);
    f.add(lambda, RatFun::constant(1, v));
    return f;
}

SymFunc1 constant1(const RatFun& c) {
    SymFunc1 f(Basis1::schur, c.vars());
    f.add(Partition(), c);
    return f;
}

SymFunc2 schur2(const BiPartition& alpha, Vars v) {
    SymFunc2 f(Basis2::schur2, v);
    f.add(alpha, RatFun::constant(1, v));
    return f;
}

SymFunc2 complete2(const BiPartition& alpha, Vars v) {
    SymFunc1 h0 = convert_basis(complete1(alpha.first, v), Basis1::schur);
    SymFunc1 h1 = convert_basis(complete1(alpha.second, v), Basis1::schur);
    SymFunc2 f(Basis2::schur2, v);
    for (const auto& [a, ca] : h0.terms)
        for (const auto& [b, cb] : h1.terms) f.add({a, b}, ca * cb);
    return f;
}

SymFunc2 wreath_power(const BiPartition& alpha, Vars v) {
    SymFunc2 f(Basis2::wreath_power, v);
    f.add(alpha, RatFun::constant(1, v));
    return f;
}

SymFunc2 constant2(const RatFun& c) {
    SymFunc2 f(Basis2::schur2, c.vars());
    f.add(BiPartition{}, c);
    return f;
}

SymFunc1 convert_basis(const SymFunc1& f, Basis1 target) {
    if (f.basis == target) return f;
    SymFunc1 s = f;
    if (f.basis != Basis1::schur) {
        Basis1 src = f.basis;
        s = apply_dense(f, Basis1::schur, [src](const Trans1& t) -> const Dense& { return to_schur_matrix(t, src); });
    }
    if (target == Basis1::schur) return s;
    return apply_dense(s, target, [target](const Trans1& t) -> const Dense& { return from_schur_matrix(t, target); });
}

SymFunc2 convert_basis(const SymFunc2& f, Basis2 target) {
    if (f.basis == target) return f;
    SymFunc2 p = f;
    if (f.basis == Basis2::schur2) p = tensor_apply(f, Basis2::power2, true);
    if (f.basis == Basis2::wreath_power) p = wreath_to_power2(f);
    if (target == Basis2::power2) return p;
    if (target == Basis2::wreath_power) return power2_to_wreath(p);
    return tensor_apply(p, Basis2::schur2, false);
}

SymFunc1 operator+(const SymFunc1& f, const SymFunc1& g) {
    SymFunc1 r = f;
    SymFunc1 h = convert_basis(g, f.basis);
    for (const auto& [k, c] : h.terms) r.add(k, c);
    return r;
}

SymFunc1 operator-(const SymFunc1& f, const SymFunc1& g) { return f + scale(g, RatFun::constant(-1, g.vars)); }

SymFunc1 operator*(const SymFunc1& f, const SymFunc1& g) {
    SymFunc1 a = convert_basis(f, Basis1::power), b = convert_basis(g, Basis1::power);
    SymFunc1 r(Basis1::power, f.vars);
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) r.add(union_of(ka, kb), ca * cb);
    return convert_basis(r, f.basis);
}

SymFunc1 scale(const SymFunc1& f, const RatFun& c) {
    SymFunc1 r(f.basis, f.vars);
    if (c.is_zero()) return r;
    for (const auto& [k, x] : f.terms) r.terms.emplace(k, x * c);
    return r;
}

bool operator==(const SymFunc1& f, const SymFunc1& g) {
    SymFunc1 a = convert_basis(f, Basis1::schur), b = convert_basis(g, Basis1::schur);
    return a.terms == b.terms;
}

SymFunc2 operator+(const SymFunc2& f, const SymFunc2& g) {
    SymFunc2 r = f;
    SymFunc2 h = convert_basis(g, f.basis);
    for (const auto& [k, c] : h.terms) r.add(k, c);
    return r;
}

SymFunc2 operator-(const SymFunc2& f, const SymFunc2& g) { return f + scale(g, RatFun::constant(-1, g.vars)); }

SymFunc2 operator*(const SymFunc2& f, const SymFunc2& g) {
    if (f.terms.size() == 1 && f.terms.begin()->first.size() == 0) return scale(g, f.terms.begin()->second);
    if (g.terms.size() == 1 && g.terms.begin()->first.size() == 0) return scale(f, g.terms.begin()->second);
    SymFunc2 a = convert_basis(f, Basis2::power2), b = convert_basis(g, Basis2::power2);
    SymFunc2 r(Basis2::power2, f.vars);
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms)
            r.add({union_of(ka.first, kb.first), union_of(ka.second, kb.second)}, ca * cb);
    return convert_basis(r, f.basis);
}

SymFunc2 scale(const SymFunc2& f, const RatFun& c) {
    SymFunc2 r(f.basis, f.vars);
    if (c.is_zero()) return r;
    for (const auto& [k, x] : f.terms) r.terms.emplace(k, x * c);
    return r;
}

bool operator==(const SymFunc2& f, const SymFunc2& g) {
    SymFunc2 a = convert_basis(f, Basis2::schur2), b = convert_basis(g, Basis2::schur2);
    return a.terms == b.terms;
}

SymFunc1 map_coeffs(const SymFunc1& f, const std::function<RatFun(const RatFun&)>& fn, Vars target) {
    SymFunc1 r(f.basis, target);
    for (const auto& [k, c] : f.terms) r.add(k, fn(c));
    return r;
}

SymFunc2 map_coeffs(const SymFunc2& f, const std::function<RatFun(const RatFun&)>& fn, Vars target) {
    SymFunc2 r(f.basis, target);
    for (const auto& [k, c] : f.terms) r.add(k, fn(c));
    return r;
}

SymFunc1 scalar_plethysm1(const SymFunc1& f, const RatFun& c) {
    SymFunc1 p = convert_basis(f, Basis1::power);
    std::map<int, RatFun> adams;
    SymFunc1 r(Basis1::power, f.vars);
    for (const auto& [k, x] : p.terms) {
        RatFun coef = x;
        for (int part : k.parts()) {
            auto it = adams.find(part);
            if (it == adams.end()) it = adams.emplace(part, c.adams(part)).first;
            coef *= it->second;
        }
        r.add(k, coef);
    }
    return convert_basis(r, f.basis);
}

RatFun plethystic_value(const SymFunc1& f, const RatFun& c) {
    SymFunc1 p = convert_basis(scalar_plethysm1(f, c), Basis1::power);
    RatFun r(c.vars());
    for (const auto& [k, x] : p.terms) r += x;
    return r;
}

SymFunc2 alphabet_substitute(const SymFunc2& f, const Matrix2& m) {
    SymFunc2 p = convert_basis(f, Basis2::power2);
    std::map<int, Matrix2> adams;
    auto entry = [&](int r) -> const Matrix2& {
        auto it = adams.find(r);
        if (it == adams.end()) {
            Matrix2 a;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) a[i][j] = m[i][j].adams(r);
            it = adams.emplace(r, a).first;
        }
        return it->second;
    };
    SymFunc2 r(Basis2::power2, f.vars);
    for (const auto& [key, c] : p.terms) {
        std::map<BiPartition, RatFun> cur{{BiPartition{}, c}};
        auto push = [&](int part, int slot) {
            const Matrix2& a = entry(part);
            std::map<BiPartition, RatFun> next;
            for (const auto& [k, x] : cur) {
                for (int j = 0; j < 2; ++j) {
                    if (a[slot][j].is_zero()) continue;
                    BiPartition nk = j == 0 ? BiPartition{union_of(k.first, Partition{part}), k.second}
                                            : BiPartition{k.first, union_of(k.second, Partition{part})};
                    RatFun v = x * a[slot][j];
                    auto it = next.find(nk);
                    if (it == next.end()) {
                        next.emplace(nk, v);
                    } else {
                        it->second += v;
                    }
                }
            }
            cur = std::move(next);
        };
        for (int part : key.first.parts()) push(part, 0);
        for (int part : key.second.parts()) push(part, 1);
        for (const auto& [k, x] : cur) r.add(k, x);
    }
    return convert_basis(r, f.basis);
}

SymFunc2 embed_diagonal(const SymFunc1& f) {
    SymFunc1 p = convert_basis(f, Basis1::power);
    SymFunc2 w(Basis2::wreath_power, f.vars);
    for (const auto& [k, c] : p.terms) w.add({k, Partition()}, c);
    return convert_basis(w, Basis2::schur2);
}

RatFun hall_inner(const SymFunc1& f, const SymFunc1& g) {
    SymFunc1 a = convert_basis(f, Basis1::schur), b = convert_basis(g, Basis1::schur);
    RatFun s(f.vars);
    for (const auto& [k, c] : a.terms) {
        auto it = b.terms.find(k);
        if (it != b.terms.end()) s += c * it->second;
    }
    return s;
}

RatFun hall_inner(const SymFunc2& f, const SymFunc2& g) {
    SymFunc2 a = convert_basis(f, Basis2::schur2), b = convert_basis(g, Basis2::schur2);
    RatFun s(f.vars);
    for (const auto& [k, c] : a.terms) {
        auto it = b.terms.find(k);
        if (it != b.terms.end()) s += c * it->second;
    }
    return s;
}

Int wreath_char(const BiPartition& alpha, const BiPartition& beta) {
    if (alpha.size() != beta.size()) throw std::invalid_argument("character of mismatched sizes");
    SymFunc2 s = convert_basis(wreath_power(beta), Basis2::schur2);
    RatFun c = s.coeff(alpha);
    if (c.is_zero()) return 0;
    Rat v = c.as_poly().constant_term();
    if (v.get_den() != 1) throw MathError("non-integral character value");
    return v.get_num();
}

std::string str(const SymFunc1& f) {
    static const char* names[] = {"s", "p", "h", "m"};
    if (f.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : f.terms) {
        os << (first ? "" : " + ") << "(" << c.str() << ")*" << names[static_cast<int>(f.basis)] << k.str();
        first = false;
    }
    return os.str();
}

std::string str(const SymFunc2& f) {
    static const char* names[] = {"s", "pp", "p"};
    if (f.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : f.terms) {
        os << (first ? "" : " + ") << "(" << c.str() << ")*" << names[static_cast<int>(f.basis)] << k.str();
        first = false;
    }
    return os.str();
}

}  // namespace wh
