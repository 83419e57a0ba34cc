#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/element_set.hpp"
#include "core/error.hpp"

namespace kset {

// Finite group as a validated multiplication table. Immutable after
// construction; identity is always element index 0.
class Group {
public:
    // Full validation: Latin square, identity pattern, exhaustive
    // associativity (order^3 triples), inverses. Rejects order > 256.
    static Group validate(std::vector<int32_t> table, int32_t order,
                          std::vector<std::string> labels = {});

    // For constructor-built tables whose associativity holds by construction
    // (direct products, semidirect products, permutation composition).
    // Still checks the Latin/identity/inverse invariants; runs the full
    // associativity sweep when the order is small enough for it.
    static Group from_structured(std::vector<int32_t> table, int32_t order,
                                 std::vector<std::string> labels,
                                 std::string name);

    int32_t order() const { return order_; }
    bool is_abelian() const { return is_abelian_; }
    bool is_odd() const { return order_ % 2 == 1; }

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    int32_t multiply(int32_t x, int32_t y) const {
        check(x);
        check(y);
        return table_[size_t(x) * order_ + y];
    }

    int32_t inverse(int32_t x) const {
        check(x);
        return inverses_[x];
    }

    // [a,b] = a^-1 b^-1 a b
    int32_t commutator(int32_t a, int32_t b) const {
        check(a);
        check(b);
        int32_t t = at(inverses_[a], inverses_[b]);
        t = at(t, a);
        return at(t, b);
    }

    int32_t conjugate(int32_t x, int32_t by) const {
        check(x);
        check(by);
        return at(at(inverses_[by], x), by);
    }

    ElementSet conjugacy_class(int32_t x) const;

    // Smallest subset containing seed and the identity, closed under
    // multiplication and inverse. Asserts Lagrange divisibility.
    ElementSet subgroup_closure(const ElementSet& seed) const;

    ElementSet commutator_subgroup() const;

    // Elements conjugate to their own inverse.
    ElementSet real_elements() const;

    int32_t element_order(int32_t x) const;

    const std::string& label(int32_t x) const {
        check(x);
        return labels_[x];
    }

    std::optional<int32_t> find_label(std::string_view s) const;

    // Unchecked table access for hot loops.
    int32_t at(int32_t x, int32_t y) const { return table_[size_t(x) * order_ + y]; }
    const int32_t* row(int32_t x) const { return table_.data() + size_t(x) * order_; }
    const std::vector<int32_t>& inverses() const { return inverses_; }

private:
    Group() = default;

    void check(int32_t i) const {
        if (i < 0 || i >= order_) throw Error(ErrorKind::Range, "element index out of range");
    }

    static Group build_checked(std::vector<int32_t> table, int32_t order,
                               std::vector<std::string> labels, std::string name,
                               bool check_associativity);

    int32_t order_ = 0;
    std::vector<int32_t> table_;
    std::vector<int32_t> inverses_;
    std::vector<std::string> labels_;
    bool is_abelian_ = false;
    std::string name_;
};

// Largest order accepted by the exhaustive associativity sweep; raw tables
// above this are rejected at validation.
constexpr int32_t kMaxValidatedOrder = 256;

// Hard cap on any group this library will materialize.
constexpr int32_t kMaxGroupOrder = 10000;

} // namespace kset
