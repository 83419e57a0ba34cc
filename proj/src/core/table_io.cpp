#include "core/table_io.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "core/perm.hpp"

namespace kset {

namespace {

struct Token {
    std::string text;
    int32_t line; // 1-based
    int32_t col;  // 1-based
};

// Whitespace-separated tokens with '#' comments stripped to end of line.
std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    int32_t line = 1, col = 1;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++col;
            ++i;
            continue;
        }
        Token t{{}, line, col};
        while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\r' &&
               text[i] != '\n' && text[i] != '#') {
            t.text += text[i];
            ++i;
            ++col;
        }
        out.push_back(std::move(t));
    }
    return out;
}

[[noreturn]] void token_error(const Token& t, const std::string& what) {
    throw Error(ErrorKind::Syntax, what + " (line " + std::to_string(t.line) + ", column " +
                                       std::to_string(t.col) + ")");
}

int64_t token_int(const Token& t) {
    if (t.text.empty() || t.text.size() > 9) token_error(t, "expected a number");
    int64_t v = 0;
    for (char c : t.text) {
        if (c < '0' || c > '9') token_error(t, "expected a number, got \"" + t.text + "\"");
        v = v * 10 + (c - '0');
    }
    return v;
}

} // namespace

Group parse_cayley_text(std::string_view text) {
    std::vector<Token> toks = tokenize(text);
    if (toks.empty()) throw Error(ErrorKind::Syntax, "empty cayley table");

    size_t ti = 0;
    int64_t order = token_int(toks[ti++]);
    if (order < 1) throw Error(ErrorKind::InvalidParam, "group order must be positive");
    if (order > kMaxValidatedOrder)
        throw Error(ErrorKind::Resource, "table order " + std::to_string(order) +
                                             " exceeds the validation cap of " +
                                             std::to_string(kMaxValidatedOrder));

    const size_t need = size_t(order) * size_t(order);
    std::vector<int32_t> table(need);
    std::vector<int32_t> row_line(order, 0);
    for (size_t k = 0; k < need; ++k) {
        if (ti >= toks.size())
            throw Error(ErrorKind::Syntax, "expected " + std::to_string(need) +
                                               " table entries, got " + std::to_string(k));
        const Token& t = toks[ti++];
        int64_t v = token_int(t);
        if (v < 0 || v >= order) token_error(t, "entry " + t.text + " out of range");
        if (k % size_t(order) == 0) row_line[k / size_t(order)] = t.line;
        table[k] = int32_t(v);
    }

    std::vector<std::string> labels;
    if (ti < toks.size()) {
        if (toks[ti].text != "labels:")
            token_error(toks[ti], "unexpected token \"" + toks[ti].text + "\" after the table");
        ++ti;
        for (int64_t k = 0; k < order; ++k) {
            if (ti >= toks.size())
                throw Error(ErrorKind::Syntax,
                            "labels: line needs " + std::to_string(order) + " labels");
            labels.push_back(toks[ti++].text);
        }
        if (ti < toks.size()) token_error(toks[ti], "trailing input after the labels");
    }

    try {
        return Group::validate(std::move(table), int32_t(order), std::move(labels));
    } catch (const Error& e) {
        // Attach file coordinates to the table-level diagnosis.
        std::string where = " (table rows start at line " + std::to_string(row_line[0]) + ")";
        throw Error(e.kind(), e.raw() + where);
    }
}

Group parse_perm_generators_text(std::string_view text) {
    constexpr int64_t kMaxPoint = 10000;
    constexpr int64_t kClosureCap = 10000;

    std::vector<std::vector<std::vector<int64_t>>> generators; // gen -> cycles -> points
    int64_t degree = 0;

    int32_t line_no = 0;
    size_t ls = 0;
    while (ls <= text.size()) {
        size_t le = text.find('\n', ls);
        std::string_view line =
            text.substr(ls, le == std::string_view::npos ? text.size() - ls : le - ls);
        ++line_no;

        if (size_t h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);

        std::vector<std::vector<int64_t>> cycles;
        std::vector<char> used; // membership per generator
        bool in_cycle = false;
        std::vector<int64_t> cur;
        int64_t num = -1;
        auto flush_num = [&](size_t col) {
            if (num < 0) return;
            if (!in_cycle)
                throw Error(ErrorKind::Syntax, "point outside parentheses (line " +
                                                   std::to_string(line_no) + ", column " +
                                                   std::to_string(col) + ")");
            if (num < 1 || num > kMaxPoint)
                throw Error(ErrorKind::InvalidParam,
                            "point " + std::to_string(num) + " out of range (line " +
                                std::to_string(line_no) + ")");
            if (size_t(num) > used.size()) used.resize(size_t(num), 0);
            if (used[size_t(num) - 1])
                throw Error(ErrorKind::Syntax, "repeated point " + std::to_string(num) +
                                                   " in a generator (line " +
                                                   std::to_string(line_no) + ")");
            used[size_t(num) - 1] = 1;
            cur.push_back(num);
            degree = std::max(degree, num);
            num = -1;
        };

        for (size_t c = 0; c < line.size(); ++c) {
            char ch = line[c];
            if (ch >= '0' && ch <= '9') {
                num = (num < 0 ? 0 : num) * 10 + (ch - '0');
                if (num > kMaxPoint)
                    throw Error(ErrorKind::InvalidParam, "point out of range (line " +
                                                             std::to_string(line_no) + ")");
                continue;
            }
            flush_num(c + 1);
            if (ch == '(') {
                if (in_cycle)
                    throw Error(ErrorKind::Syntax, "nested '(' (line " + std::to_string(line_no) +
                                                       ", column " + std::to_string(c + 1) + ")");
                in_cycle = true;
                cur.clear();
            } else if (ch == ')') {
                if (!in_cycle)
                    throw Error(ErrorKind::Syntax, "unmatched ')' (line " +
                                                       std::to_string(line_no) + ", column " +
                                                       std::to_string(c + 1) + ")");
                in_cycle = false;
                if (!cur.empty()) cycles.push_back(cur);
            } else if (ch == ' ' || ch == '\t' || ch == '\r' || ch == ',') {
                // separators
            } else {
                throw Error(ErrorKind::Syntax, std::string("unexpected character '") + ch +
                                                   "' (line " + std::to_string(line_no) +
                                                   ", column " + std::to_string(c + 1) + ")");
            }
        }
        flush_num(line.size());
        if (in_cycle)
            throw Error(ErrorKind::Syntax,
                        "unbalanced '(' (line " + std::to_string(line_no) + ")");
        if (!cycles.empty()) generators.push_back(std::move(cycles));

        if (le == std::string_view::npos) break;
        ls = le + 1;
    }

    if (degree == 0) degree = 1;

    std::vector<Perm> gens;
    for (const auto& cycles : generators) {
        Perm p = identity_perm(int32_t(degree));
        for (const auto& cyc : cycles)
            for (size_t i = 0; i < cyc.size(); ++i)
                p[size_t(cyc[i] - 1)] = int32_t(cyc[(i + 1) % cyc.size()] - 1);
        gens.push_back(std::move(p));
    }

    // Closure by breadth-first right multiplication from the identity.
    struct PermHash {
        size_t operator()(const Perm& p) const {
            size_t h = 1469598103934665603ULL;
            for (int32_t v : p) {
                h ^= size_t(v);
                h *= 1099511628211ULL;
            }
            return h;
        }
    };
    std::unordered_map<Perm, int32_t, PermHash> index;
    std::vector<Perm> elems;
    elems.push_back(identity_perm(int32_t(degree)));
    index.emplace(elems[0], 0);
    for (size_t qi = 0; qi < elems.size(); ++qi) {
        for (const Perm& g : gens) {
            Perm f = compose_perm(elems[qi], g);
            if (index.emplace(f, int32_t(elems.size())).second) {
                elems.push_back(std::move(f));
                if (int64_t(elems.size()) > kClosureCap)
                    throw Error(ErrorKind::Resource, "ClosureTooLarge: generator closure exceeds " +
                                                         std::to_string(kClosureCap) +
                                                         " elements");
            }
        }
    }

    const int64_t order = int64_t(elems.size());
    std::vector<int32_t> table(size_t(order) * size_t(order));
    for (int64_t i = 0; i < order; ++i)
        for (int64_t j = 0; j < order; ++j)
            table[size_t(i) * order + j] = index.at(compose_perm(elems[i], elems[j]));

    std::vector<std::string> labels;
    labels.reserve(order);
    for (const Perm& e : elems) labels.push_back(perm_cycle_label(e));

    return Group::from_structured(std::move(table), int32_t(order), std::move(labels), "perm");
}

} // namespace kset
