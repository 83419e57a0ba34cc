#include "core/families.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "core/perm.hpp"

namespace kset {

namespace {

int64_t checked_order(int64_t order) {
    if (order > kMaxGroupOrder)
        throw Error(ErrorKind::InvalidParam,
                    "group order " + std::to_string(order) + " exceeds the cap of " +
                        std::to_string(kMaxGroupOrder));
    return order;
}

int64_t pow_mod(int64_t base, int64_t exp, int64_t mod) {
    int64_t r = 1 % mod;
    base %= mod;
    for (; exp > 0; exp >>= 1) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
    }
    return r;
}

bool is_odd_prime(int64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (int64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

} // namespace

std::string perm_cycle_label(const Perm& p) {
    std::string out;
    std::vector<char> seen(p.size(), 0);
    for (size_t start = 0; start < p.size(); ++start) {
        if (seen[start] || p[start] == int32_t(start)) continue;
        out += '(';
        size_t cur = start;
        bool first = true;
        while (!seen[cur]) {
            seen[cur] = 1;
            if (!first) out += ' ';
            out += std::to_string(cur + 1);
            first = false;
            cur = size_t(p[cur]);
        }
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

Group make_abelian(const std::vector<int64_t>& factors) {
    if (factors.empty()) throw Error(ErrorKind::InvalidParam, "abelian factor list is empty");
    int64_t order = 1;
    for (int64_t f : factors) {
        if (f < 1) throw Error(ErrorKind::InvalidParam, "abelian factor must be >= 1");
        order = checked_order(order * f);
    }

    const size_t k = factors.size();
    auto decode = [&](int64_t e, std::vector<int64_t>& digits) {
        for (size_t i = 0; i < k; ++i) {
            digits[i] = e % factors[i];
            e /= factors[i];
        }
    };

    std::vector<int32_t> table(size_t(order) * size_t(order));
    std::vector<int64_t> di(k), dj(k);
    for (int64_t i = 0; i < order; ++i) {
        decode(i, di);
        for (int64_t j = 0; j < order; ++j) {
            decode(j, dj);
            int64_t enc = 0;
            for (size_t f = k; f-- > 0;) enc = enc * factors[f] + (di[f] + dj[f]) % factors[f];
            table[size_t(i) * order + j] = int32_t(enc);
        }
    }

    std::vector<std::string> labels;
    labels.reserve(order);
    std::vector<int64_t> d(k);
    for (int64_t i = 0; i < order; ++i) {
        decode(i, d);
        if (k == 1) {
            labels.push_back(std::to_string(d[0]));
        } else {
            std::string s = "(";
            for (size_t f = 0; f < k; ++f) {
                if (f) s += ',';
                s += std::to_string(d[f]);
            }
            s += ')';
            labels.push_back(std::move(s));
        }
    }

    std::string name = k == 1 ? "cyclic:" + std::to_string(factors[0]) : "abelian:";
    if (k > 1)
        for (size_t f = 0; f < k; ++f)
            name += (f ? "x" : "") + std::to_string(factors[f]);

    return Group::from_structured(std::move(table), int32_t(order), std::move(labels),
                                  std::move(name));
}

Group make_semidirect(int64_t n, int64_t q, int64_t r) {
    if (n < 2 || q < 2) throw Error(ErrorKind::InvalidParam, "semidirect requires n, q >= 2");
    r %= n;
    if (r < 0) r += n;
    if (std::gcd(r, n) != 1)
        throw Error(ErrorKind::InvalidParam, "InvalidAction: gcd(r, n) must be 1");
    if (r == 1) throw Error(ErrorKind::InvalidParam, "InvalidAction: r = 1 mod n gives a direct product");
    if (pow_mod(r, q, n) != 1)
        throw Error(ErrorKind::InvalidParam, "InvalidAction: r^q != 1 mod n");
    int64_t order = checked_order(n * q);

    // r^y for y in 0..q-1
    std::vector<int64_t> rp(q);
    rp[0] = 1 % n;
    for (int64_t y = 1; y < q; ++y) rp[y] = rp[y - 1] * r % n;

    std::vector<int32_t> table(size_t(order) * size_t(order));
    for (int64_t i = 0; i < order; ++i) {
        int64_t x1 = i % n, y1 = i / n;
        for (int64_t j = 0; j < order; ++j) {
            int64_t x2 = j % n, y2 = j / n;
            int64_t x = (x1 + rp[y1] * x2) % n;
            int64_t y = (y1 + y2) % q;
            table[size_t(i) * order + j] = int32_t(x + n * y);
        }
    }

    std::vector<std::string> labels;
    labels.reserve(order);
    for (int64_t i = 0; i < order; ++i)
        labels.push_back("(" + std::to_string(i % n) + "," + std::to_string(i / n) + ")");

    return Group::from_structured(std::move(table), int32_t(order), std::move(labels),
                                  "semidirect:" + std::to_string(n) + ":" + std::to_string(q) +
                                      ":" + std::to_string(r));
}

Group make_heisenberg(int64_t p) {
    if (!is_odd_prime(p) || p > 13)
        throw Error(ErrorKind::InvalidParam, "heisenberg parameter must be an odd prime <= 13");
    int64_t order = checked_order(p * p * p);

    auto enc = [&](int64_t a, int64_t b, int64_t c) { return a + p * b + p * p * c; };

    std::vector<int32_t> table(size_t(order) * size_t(order));
    for (int64_t i = 0; i < order; ++i) {
        int64_t a1 = i % p, b1 = (i / p) % p, c1 = i / (p * p);
        for (int64_t j = 0; j < order; ++j) {
            int64_t a2 = j % p, b2 = (j / p) % p, c2 = j / (p * p);
            table[size_t(i) * order + j] =
                int32_t(enc((a1 + a2) % p, (b1 + b2) % p, (c1 + c2 + a1 * b2) % p));
        }
    }

    std::vector<std::string> labels;
    labels.reserve(order);
    for (int64_t i = 0; i < order; ++i)
        labels.push_back("(" + std::to_string(i % p) + "," + std::to_string((i / p) % p) + "," +
                         std::to_string(i / (p * p)) + ")");

    return Group::from_structured(std::move(table), int32_t(order), std::move(labels),
                                  "heisenberg:" + std::to_string(p));
}

Group make_symmetric(int64_t m) {
    if (m < 1 || m > 7)
        throw Error(ErrorKind::InvalidParam, "symmetric degree must be between 1 and 7");

    std::vector<Perm> elems;
    Perm p = identity_perm(int32_t(m));
    do {
        elems.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const int64_t order = int64_t(elems.size());

    // Lexicographic rank via the factorial number system; identity ranks 0.
    auto rank = [&](const Perm& q) {
        int64_t r = 0;
        for (size_t i = 0; i < q.size(); ++i) {
            int32_t smaller = 0;
            for (size_t j = i + 1; j < q.size(); ++j)
                if (q[j] < q[i]) ++smaller;
            r = r * int64_t(q.size() - i) + smaller;
        }
        return r;
    };

    std::vector<int32_t> table(size_t(order) * size_t(order));
    for (int64_t i = 0; i < order; ++i)
        for (int64_t j = 0; j < order; ++j)
            table[size_t(i) * order + j] = int32_t(rank(compose_perm(elems[i], elems[j])));

    std::vector<std::string> labels;
    labels.reserve(order);
    for (const Perm& e : elems) labels.push_back(perm_cycle_label(e));

    return Group::from_structured(std::move(table), int32_t(order), std::move(labels),
                                  "sym:" + std::to_string(m));
}

} // namespace kset
