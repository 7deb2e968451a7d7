#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <set>
#include <string>

#include "satelim/monomial.hpp"

namespace satelim {

// Global monomial order descriptor.  Degree-graded kinds use the plain
// (unweighted) total degree.  Block orders compare the first `split`
// exponents under `first`, then the rest under `second`.
class MonomialOrder {
public:
    enum class Kind : std::uint8_t { Lex, DegLex, DegRevLex, Block };

    static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
    static MonomialOrder deglex() { return MonomialOrder(Kind::DegLex); }
    static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex); }
    static MonomialOrder block(std::size_t split, MonomialOrder first, MonomialOrder second);

    Kind kind() const { return kind_; }
    std::size_t split() const { return split_; }
    const MonomialOrder& first() const { return *first_; }
    const MonomialOrder& second() const { return *second_; }

    bool operator==(const MonomialOrder&) const;
    bool operator!=(const MonomialOrder& o) const { return !(*this == o); }

    std::string str() const;
    // Accepts lex | deglex | degrevlex | block(<n>:<order>,<order>).
    static MonomialOrder parse(const std::string& text);

private:
    explicit MonomialOrder(Kind k) : kind_(k) {}

    Kind kind_;
    std::size_t split_ = 0;
    std::shared_ptr<const MonomialOrder> first_;
    std::shared_ptr<const MonomialOrder> second_;
};

std::strong_ordering compare(const Monomial& a, const Monomial& b, const MonomialOrder& o);

// True iff any monomial involving a variable from `elim` is greater than
// every monomial in the remaining variables alone.
bool is_elimination_order(const MonomialOrder& o, const std::set<std::size_t>& elim, std::size_t nvars);

enum class ModuleScheme : std::uint8_t { PositionOverTerm, TermOverPosition };

// Order on terms of a free module.  Lower position index wins ties towards
// "greater", so position 0 is the dominant slot under PositionOverTerm.
struct ModuleOrder {
    MonomialOrder base = MonomialOrder::degrevlex();
    ModuleScheme scheme = ModuleScheme::TermOverPosition;

    bool operator==(const ModuleOrder&) const = default;
};

std::strong_ordering compare(std::size_t pos_a, const Monomial& a, std::size_t pos_b, const Monomial& b,
                             const ModuleOrder& o);

}  // namespace satelim
