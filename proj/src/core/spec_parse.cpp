#include "core/spec_parse.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "core/families.hpp"
#include "core/table_io.hpp"

namespace kset {

namespace {

[[noreturn]] void syntax_error(std::string_view text, size_t pos, const std::string& what) {
    throw Error(ErrorKind::Syntax,
                what + " at position " + std::to_string(pos) + " in \"" + std::string(text) + "\"");
}

// Digits-only integer; rejects empty and overlong runs.
int64_t parse_int(std::string_view text, std::string_view tok, size_t pos) {
    if (tok.empty()) syntax_error(text, pos, "expected a number");
    if (tok.size() > 9) syntax_error(text, pos, "number too long");
    int64_t v = 0;
    for (char c : tok) {
        if (c < '0' || c > '9') syntax_error(text, pos, "expected a number");
        v = v * 10 + (c - '0');
    }
    return v;
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

void check_total_order(int64_t order) {
    if (order > kMaxGroupOrder)
        throw Error(ErrorKind::InvalidParam, "group order " + std::to_string(order) +
                                                 " exceeds the cap of " +
                                                 std::to_string(kMaxGroupOrder));
}

} // namespace

std::string GroupSpec::canonical_name() const {
    switch (kind) {
        case SpecKind::Cyclic: return "cyclic:" + std::to_string(params[0]);
        case SpecKind::Abelian: {
            std::string s = "abelian:";
            for (size_t i = 0; i < params.size(); ++i)
                s += (i ? "x" : "") + std::to_string(params[i]);
            return s;
        }
        case SpecKind::Semidirect:
            return "semidirect:" + std::to_string(params[0]) + ":" + std::to_string(params[1]) +
                   ":" + std::to_string(params[2]);
        case SpecKind::Heisenberg: return "heisenberg:" + std::to_string(params[0]);
        case SpecKind::Symmetric: return "sym:" + std::to_string(params[0]);
        case SpecKind::TableFile: return "file:" + path;
        case SpecKind::PermFile: return "perm:" + path;
    }
    return {};
}

GroupSpec parse_spec(std::string_view text) {
    size_t colon = text.find(':');
    if (colon == std::string_view::npos)
        syntax_error(text, text.size(), "expected ':' after the family name");
    std::string_view head = text.substr(0, colon);
    std::string_view rest = text.substr(colon + 1);
    size_t rest_pos = colon + 1;

    if (head == "cyclic") {
        int64_t n = parse_int(text, rest, rest_pos);
        if (n < 1) throw Error(ErrorKind::InvalidParam, "cyclic order must be >= 1");
        check_total_order(n);
        return {SpecKind::Cyclic, {n}, {}};
    }

    if (head == "abelian") {
        std::vector<int64_t> factors;
        size_t pos = rest_pos;
        size_t start = 0;
        if (rest.empty()) syntax_error(text, rest_pos, "expected factor list");
        while (start <= rest.size()) {
            size_t x = rest.find('x', start);
            std::string_view tok =
                rest.substr(start, x == std::string_view::npos ? rest.size() - start : x - start);
            int64_t f = parse_int(text, tok, pos);
            if (f < 1) throw Error(ErrorKind::InvalidParam, "abelian factor must be >= 1");
            factors.push_back(f);
            if (x == std::string_view::npos) break;
            start = x + 1;
            pos = rest_pos + start;
        }
        int64_t order = 1;
        for (int64_t f : factors) {
            order *= f;
            check_total_order(order);
        }
        return {SpecKind::Abelian, std::move(factors), {}};
    }

    if (head == "semidirect") {
        std::vector<int64_t> p;
        size_t pos = rest_pos;
        size_t start = 0;
        for (int i = 0; i < 3; ++i) {
            size_t c = rest.find(':', start);
            bool last = (i == 2);
            if (!last && c == std::string_view::npos)
                syntax_error(text, text.size(), "semidirect needs three parameters N:Q:R");
            if (last && c != std::string_view::npos)
                syntax_error(text, rest_pos + c, "unexpected ':' after the third parameter");
            std::string_view tok =
                rest.substr(start, last ? rest.size() - start : c - start);
            p.push_back(parse_int(text, tok, pos));
            if (!last) {
                start = c + 1;
                pos = rest_pos + start;
            }
        }
        int64_t n = p[0], q = p[1], r = p[2];
        if (n < 2 || q < 2) throw Error(ErrorKind::InvalidParam, "semidirect requires n, q >= 2");
        check_total_order(n * q);
        int64_t rm = r % n;
        if (std::gcd(rm, n) != 1)
            throw Error(ErrorKind::InvalidParam, "InvalidAction: gcd(r, n) must be 1");
        if (rm == 1)
            throw Error(ErrorKind::InvalidParam,
                        "InvalidAction: r = 1 mod n gives a direct product");
        if (pow_mod(rm, q, n) != 1)
            throw Error(ErrorKind::InvalidParam, "InvalidAction: r^q != 1 mod n (action order)");
        return {SpecKind::Semidirect, {n, q, r}, {}};
    }

    if (head == "heisenberg") {
        int64_t p = parse_int(text, rest, rest_pos);
        if (p < 3 || p % 2 == 0 || p > 13)
            throw Error(ErrorKind::InvalidParam, "heisenberg parameter must be an odd prime <= 13");
        for (int64_t d = 3; d * d <= p; d += 2)
            if (p % d == 0)
                throw Error(ErrorKind::InvalidParam,
                            "heisenberg parameter must be an odd prime <= 13");
        return {SpecKind::Heisenberg, {p}, {}};
    }

    if (head == "sym") {
        int64_t m = parse_int(text, rest, rest_pos);
        if (m < 1 || m > 7)
            throw Error(ErrorKind::InvalidParam, "symmetric degree must be between 1 and 7");
        return {SpecKind::Symmetric, {m}, {}};
    }

    if (head == "file" || head == "perm") {
        if (rest.empty()) syntax_error(text, rest_pos, "expected a file path");
        return {head == "file" ? SpecKind::TableFile : SpecKind::PermFile,
                {},
                std::string(rest)};
    }

    syntax_error(text, 0, "unknown family \"" + std::string(head) + "\"");
}

Group build_group(const GroupSpec& spec) {
    switch (spec.kind) {
        case SpecKind::Cyclic: {
            Group g = make_abelian({spec.params[0]});
            g.set_name(spec.canonical_name());
            return g;
        }
        case SpecKind::Abelian: return make_abelian(spec.params);
        case SpecKind::Semidirect:
            return make_semidirect(spec.params[0], spec.params[1], spec.params[2]);
        case SpecKind::Heisenberg: return make_heisenberg(spec.params[0]);
        case SpecKind::Symmetric: return make_symmetric(spec.params[0]);
        case SpecKind::TableFile:
        case SpecKind::PermFile: {
            std::ifstream in(spec.path);
            if (!in) throw Error(ErrorKind::Io, "cannot read file \"" + spec.path + "\"");
            std::ostringstream buf;
            buf << in.rdbuf();
            Group g = spec.kind == SpecKind::TableFile ? parse_cayley_text(buf.str())
                                                       : parse_perm_generators_text(buf.str());
            g.set_name(spec.canonical_name());
            return g;
        }
    }
    throw Error(ErrorKind::Internal, "unhandled spec kind");
}

} // namespace kset
