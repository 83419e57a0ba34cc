#include "core/group.hpp"

#include <string>

namespace kset {

namespace {

std::string default_label(int32_t i) { return std::to_string(i); }

} // namespace

Group Group::validate(std::vector<int32_t> table, int32_t order,
                      std::vector<std::string> labels) {
    if (order > kMaxValidatedOrder)
        throw Error(ErrorKind::Resource,
                    "table order " + std::to_string(order) + " exceeds the validation cap of " +
                        std::to_string(kMaxValidatedOrder));
    return build_checked(std::move(table), order, std::move(labels), "table", true);
}

Group Group::from_structured(std::vector<int32_t> table, int32_t order,
                             std::vector<std::string> labels, std::string name) {
    if (order > kMaxGroupOrder)
        throw Error(ErrorKind::Resource,
                    "group order " + std::to_string(order) + " exceeds the cap of " +
                        std::to_string(kMaxGroupOrder));
    // Associativity of structured tables is inherited from the construction
    // rule; re-check exhaustively whenever that is cheap.
    return build_checked(std::move(table), order, std::move(labels), std::move(name),
                         order <= kMaxValidatedOrder);
}

Group Group::build_checked(std::vector<int32_t> table, int32_t order,
                           std::vector<std::string> labels, std::string name,
                           bool check_associativity) {
    if (order <= 0) throw Error(ErrorKind::InvalidParam, "group order must be positive");
    if (table.size() != size_t(order) * size_t(order))
        throw Error(ErrorKind::InvalidParam, "table is not order x order");

    for (int32_t v : table)
        if (v < 0 || v >= order)
            throw Error(ErrorKind::InvalidParam, "table entry out of range");

    // Identity pattern at index 0.
    for (int32_t j = 0; j < order; ++j) {
        if (table[j] != j)
            throw Error(ErrorKind::NoIdentity,
                        "row 0 is not the identity row at column " + std::to_string(j));
        if (table[size_t(j) * order] != j)
            throw Error(ErrorKind::NoIdentity,
                        "column 0 is not the identity column at row " + std::to_string(j));
    }

    // Latin square.
    {
        std::vector<int8_t> seen(order);
        for (int32_t i = 0; i < order; ++i) {
            std::fill(seen.begin(), seen.end(), 0);
            for (int32_t j = 0; j < order; ++j) {
                int32_t v = table[size_t(i) * order + j];
                if (seen[v]++)
                    throw Error(ErrorKind::NotLatin, "row " + std::to_string(i) +
                                                         " repeats entry " + std::to_string(v));
            }
        }
        for (int32_t j = 0; j < order; ++j) {
            std::fill(seen.begin(), seen.end(), 0);
            for (int32_t i = 0; i < order; ++i) {
                int32_t v = table[size_t(i) * order + j];
                if (seen[v]++)
                    throw Error(ErrorKind::NotLatin, "column " + std::to_string(j) +
                                                         " repeats entry " + std::to_string(v));
            }
        }
    }

    if (check_associativity) {
        for (int32_t a = 0; a < order; ++a)
            for (int32_t b = 0; b < order; ++b) {
                int32_t ab = table[size_t(a) * order + b];
                const int32_t* row_a = table.data() + size_t(a) * order;
                const int32_t* row_ab = table.data() + size_t(ab) * order;
                for (int32_t c = 0; c < order; ++c) {
                    int32_t bc = table[size_t(b) * order + c];
                    if (row_ab[c] != row_a[bc])
                        throw Error(ErrorKind::NotAssociative,
                                    "(a*b)*c != a*(b*c) for triple (" + std::to_string(a) + "," +
                                        std::to_string(b) + "," + std::to_string(c) + ")");
                }
            }
    }

    Group g;
    g.order_ = order;
    g.table_ = std::move(table);
    g.name_ = std::move(name);

    // With associativity, identity and Latin rows settled, the row solution
    // of x*y = 0 is a two-sided inverse.
    g.inverses_.assign(order, 0);
    for (int32_t i = 0; i < order; ++i) {
        for (int32_t j = 0; j < order; ++j) {
            if (g.table_[size_t(i) * order + j] == 0) {
                g.inverses_[i] = j;
                break;
            }
        }
        if (g.table_[size_t(g.inverses_[i]) * order + i] != 0)
            throw Error(ErrorKind::NotAssociative,
                        "element " + std::to_string(i) + " has no two-sided inverse");
    }

    g.is_abelian_ = true;
    for (int32_t i = 1; i < order && g.is_abelian_; ++i)
        for (int32_t j = i + 1; j < order; ++j)
            if (g.table_[size_t(i) * order + j] != g.table_[size_t(j) * order + i]) {
                g.is_abelian_ = false;
                break;
            }

    if (labels.empty()) {
        g.labels_.reserve(order);
        for (int32_t i = 0; i < order; ++i) g.labels_.push_back(default_label(i));
    } else {
        if (labels.size() != size_t(order))
            throw Error(ErrorKind::InvalidParam, "label count does not match order");
        g.labels_ = std::move(labels);
    }

    return g;
}

ElementSet Group::conjugacy_class(int32_t x) const {
    check(x);
    ElementSet cls(order_);
    for (int32_t h = 0; h < order_; ++h) cls.insert(at(at(inverses_[h], x), h));
    return cls;
}

ElementSet Group::subgroup_closure(const ElementSet& seed) const {
    if (seed.universe() != order_)
        throw Error(ErrorKind::Range, "seed universe does not match group order");

    ElementSet closed(order_);
    std::vector<int32_t> members;
    auto add = [&](int32_t v) {
        if (!closed.contains(v)) {
            closed.insert(v);
            members.push_back(v);
        }
    };

    add(0);
    for (int32_t s : seed.to_vector()) {
        add(s);
        add(inverses_[s]);
    }

    // Worklist: every pair (u, v) is multiplied both ways during the pass of
    // whichever member was added later, so the sweep reaches a fixpoint.
    for (size_t qi = 0; qi < members.size(); ++qi) {
        int32_t x = members[qi];
        for (size_t j = 0; j < members.size(); ++j) {
            int32_t m = members[j];
            add(at(x, m));
            add(at(m, x));
        }
    }

    if (order_ % int32_t(members.size()) != 0)
        throw Error(ErrorKind::Internal, "closure size does not divide group order");
    return closed;
}

ElementSet Group::commutator_subgroup() const {
    ElementSet gens(order_);
    for (int32_t a = 0; a < order_; ++a)
        for (int32_t b = a + 1; b < order_; ++b) {
            int32_t c = commutator(a, b);
            gens.insert(c);
            gens.insert(inverses_[c]);
        }
    ElementSet sub = subgroup_closure(gens);

    // Normality: closed under conjugation by every element.
    for (int32_t h : sub.to_vector())
        for (int32_t x = 0; x < order_; ++x)
            if (!sub.contains(conjugate(h, x)))
                throw Error(ErrorKind::Internal, "commutator subgroup is not normal");
    return sub;
}

ElementSet Group::real_elements() const {
    ElementSet real(order_);
    for (int32_t x = 0; x < order_; ++x) {
        int32_t target = inverses_[x];
        for (int32_t h = 0; h < order_; ++h) {
            if (at(at(inverses_[h], x), h) == target) {
                real.insert(x);
                break;
            }
        }
    }
    return real;
}

int32_t Group::element_order(int32_t x) const {
    check(x);
    int32_t n = 1;
    int32_t p = x;
    while (p != 0) {
        p = at(p, x);
        ++n;
    }
    return n;
}

std::optional<int32_t> Group::find_label(std::string_view s) const {
    for (int32_t i = 0; i < order_; ++i)
        if (labels_[i] == s) return i;
    return std::nullopt;
}

} // namespace kset
