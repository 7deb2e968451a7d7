#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "satelim/field.hpp"

namespace satelim {

class RingSpec;
using RingPtr = std::shared_ptr<const RingSpec>;

// Polynomial ring k[v_0, ..., v_{n-1}] with a 0/1 grading weight per
// variable.  Weight-1 variables are the ones a homogenization tracks and
// an elimination removes; weight-0 variables form the base subring.
class RingSpec {
public:
    RingSpec(FieldSpec field, std::vector<std::string> vars, std::vector<int> weights,
             std::optional<std::size_t> homog_var = std::nullopt);

    static RingPtr make(FieldSpec field, std::vector<std::string> vars, std::vector<int> weights,
                        std::optional<std::size_t> homog_var = std::nullopt) {
        return std::make_shared<const RingSpec>(std::move(field), std::move(vars), std::move(weights), homog_var);
    }

    const FieldSpec& field() const { return field_; }
    std::size_t var_count() const { return vars_.size(); }
    const std::string& var_name(std::size_t i) const { return vars_[i]; }
    const std::vector<std::string>& var_names() const { return vars_; }
    std::optional<std::size_t> var_index(std::string_view name) const;
    int weight(std::size_t i) const { return weights_[i]; }
    const std::vector<int>& weights() const { return weights_; }
    std::optional<std::size_t> homog_var() const { return homog_var_; }
    std::vector<std::size_t> vars_with_weight(int w) const;

    bool operator==(const RingSpec&) const;

private:
    FieldSpec field_;
    std::vector<std::string> vars_;
    std::vector<int> weights_;
    std::optional<std::size_t> homog_var_;
};

// Structural compatibility; pointer equality is the fast path.
bool same_ring(const RingPtr& a, const RingPtr& b);

bool valid_var_name(std::string_view name);

}  // namespace satelim
