#include "wh/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace wh {

Partition::Partition(std::vector<int> parts) {
    for (int p : parts)
        if (p < 0) throw std::invalid_argument("negative part in partition");
    parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    parts_ = std::move(parts);
    for (int p : parts_) size_ += p;
}

Partition Partition::dual() const {
    std::vector<int> d;
    if (!parts_.empty()) {
        d.assign(parts_[0], 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++d[j];
    }
    return Partition(d);
}

int Partition::n() const {
    int s = 0;
    for (int i = 0; i < length(); ++i) s += i * parts_[i];
    return s;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < length(); ++i) os << (i ? "," : "") << parts_[i];
    os << "]";
    return os.str();
}

std::string BiPartition::str() const { return "(" + first.str() + "," + second.str() + ")"; }

namespace {

void gen_partitions(int n, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::mutex partition_cache_mutex;

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
    static std::map<int, std::vector<Partition>> cache;
    std::lock_guard<std::mutex> lock(partition_cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Partition> out;
    std::vector<int> cur;
    if (n >= 0) gen_partitions(n, n, cur, out);
    return cache.emplace(n, std::move(out)).first->second;
}

const std::vector<BiPartition>& bipartitions_of(int n) {
    static std::map<int, std::vector<BiPartition>> cache;
    {
        std::lock_guard<std::mutex> lock(partition_cache_mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    std::vector<BiPartition> out;
    for (int a = n; a >= 0; --a)
        for (const auto& l : partitions_of(a))
            for (const auto& m : partitions_of(n - a)) out.push_back({l, m});
    std::lock_guard<std::mutex> lock(partition_cache_mutex);
    return cache.emplace(n, std::move(out)).first->second;
}

bool dominance_geq(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw std::invalid_argument("dominance of partitions of different sizes");
    int sl = 0, sm = 0;
    int len = std::max(lambda.length(), mu.length());
    for (int i = 0; i < len; ++i) {
        sl += lambda[i];
        sm += mu[i];
        if (sl < sm) return false;
    }
    return true;
}

namespace {

// Beta numbers lambda_i + r - i for i = 1..r.
std::vector<int> beta_set(const Partition& lambda, int r) {
    std::vector<int> b(r);
    for (int i = 0; i < r; ++i) b[i] = lambda[i] + r - 1 - i;
    return b;
}

Partition from_beta(std::vector<int> b) {
    std::sort(b.begin(), b.end(), std::greater<>());
    int r = static_cast<int>(b.size());
    std::vector<int> parts(r);
    for (int i = 0; i < r; ++i) parts[i] = b[i] - (r - 1 - i);
    return Partition(parts);
}

// Splits beta numbers by parity into two decreasing lists of halves.
void split_beta(const std::vector<int>& b, std::vector<int>& even, std::vector<int>& odd) {
    for (int x : b) (x % 2 == 0 ? even : odd).push_back(x / 2);
    std::sort(even.begin(), even.end(), std::greater<>());
    std::sort(odd.begin(), odd.end(), std::greater<>());
}

Partition quotient_part(const std::vector<int>& y) {
    int l = static_cast<int>(y.size());
    std::vector<int> parts(l);
    for (int k = 0; k < l; ++k) parts[k] = y[k] - l + (k + 1);
    return Partition(parts);
}

}  // namespace

CoreQuotient core2_quotient2(const Partition& lambda) {
    // The core: slide every bead down its runner.
    std::vector<int> even, odd;
    split_beta(beta_set(lambda, lambda.length()), even, odd);
    std::vector<int> core_beta;
    for (std::size_t i = 0; i < even.size(); ++i) core_beta.push_back(2 * static_cast<int>(i));
    for (std::size_t i = 0; i < odd.size(); ++i) core_beta.push_back(2 * static_cast<int>(i) + 1);
    Partition core = from_beta(core_beta);
    int d = core.empty() ? 0 : core[0];

    int r = lambda.length();
    if ((r % 2) != ((d + 1) % 2)) ++r;
    even.clear();
    odd.clear();
    split_beta(beta_set(lambda, r), even, odd);
    return {d, {quotient_part(even), quotient_part(odd)}};
}

Partition brace(const BiPartition& alpha, int e) {
    if (e != 0 && e != 1) throw std::invalid_argument("2-core must be 0 or 1");
    int m = std::max(alpha.first.length(), alpha.second.length() + e) + 1;
    int l0 = m + 1;
    int l1 = e == 0 ? m : m - 1;
    std::vector<int> b;
    for (int k = 0; k < l0; ++k) b.push_back(2 * (alpha.first[k] + l0 - 1 - k));
    for (int k = 0; k < l1; ++k) b.push_back(2 * (alpha.second[k] + l1 - 1 - k) + 1);
    return from_beta(b);
}

std::vector<Hook> hooks(const Partition& lambda) {
    std::vector<Hook> out;
    Partition d = lambda.dual();
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j) {
            int arm = lambda[i] - j - 1;
            int leg = d[j] - i - 1;
            out.push_back({arm, leg, arm + leg + 1});
        }
    return out;
}

RatFun hook_poly(const Partition& lambda) {
    Poly p = Poly::constant(1, Vars::qt);
    for (const auto& h : hooks(lambda)) p = p * (Poly::constant(1) - Poly::monomial(1, h.hook, 0));
    return RatFun(p);
}

Int z_lambda(const Partition& lambda) {
    Int z = 1;
    std::map<int, int> mult;
    for (int p : lambda.parts()) ++mult[p];
    for (auto [p, m] : mult)
        for (int i = 1; i <= m; ++i) z *= p * i;
    return z;
}

Int z_bipartition(const BiPartition& alpha) {
    Int z = z_lambda(alpha.first) * z_lambda(alpha.second);
    mpz_mul_2exp(z.get_mpz_t(), z.get_mpz_t(), alpha.length());
    return z;
}

Partition parse_partition(const std::string& s) {
    std::vector<int> parts;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) return;
        std::size_t pos = 0;
        int v = std::stoi(cur, &pos);
        if (pos != cur.size() || v < 0) throw std::invalid_argument("bad partition: " + s);
        parts.push_back(v);
        cur.clear();
    };
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            cur += c;
        } else if (c == '+' || c == ',' || c == ' ') {
            flush();
        } else if (c != '[' && c != ']') {
            throw std::invalid_argument("bad partition: " + s);
        }
    }
    flush();
    return Partition(parts);
}

BiPartition parse_bipartition(const std::string& s) {
    auto open1 = s.find('[');
    auto close1 = s.find(']', open1 == std::string::npos ? 0 : open1);
    if (open1 == std::string::npos || close1 == std::string::npos) throw std::invalid_argument("bad bipartition: " + s);
    auto open2 = s.find('[', close1);
    auto close2 = s.find(']', open2 == std::string::npos ? close1 : open2);
    if (open2 == std::string::npos || close2 == std::string::npos) throw std::invalid_argument("bad bipartition: " + s);
    return {parse_partition(s.substr(open1, close1 - open1 + 1)), parse_partition(s.substr(open2, close2 - open2 + 1))};
}

}  // namespace wh
