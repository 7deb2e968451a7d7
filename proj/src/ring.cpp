#include "satelim/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace satelim {

bool valid_var_name(std::string_view name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    return std::all_of(name.begin() + 1, name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

RingSpec::RingSpec(FieldSpec field, std::vector<std::string> vars, std::vector<int> weights,
                   std::optional<std::size_t> homog_var)
    : field_(std::move(field)), vars_(std::move(vars)), weights_(std::move(weights)), homog_var_(homog_var) {
    if (vars_.size() != weights_.size()) throw usage_error("one weight per variable required");
    std::set<std::string_view> seen;
    for (const auto& v : vars_) {
        if (!valid_var_name(v)) throw usage_error("invalid variable name '" + v + "'");
        if (!seen.insert(v).second) throw usage_error("duplicate variable name '" + v + "'");
    }
    for (int w : weights_)
        if (w != 0 && w != 1) throw usage_error("variable weights must be 0 or 1");
    if (homog_var_) {
        if (*homog_var_ >= vars_.size()) throw usage_error("homogenization variable index out of range");
        if (weights_[*homog_var_] != 1) throw usage_error("homogenization variable must have weight 1");
    }
}

std::optional<std::size_t> RingSpec::var_index(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    return std::nullopt;
}

std::vector<std::size_t> RingSpec::vars_with_weight(int w) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < weights_.size(); ++i)
        if (weights_[i] == w) out.push_back(i);
    return out;
}

bool RingSpec::operator==(const RingSpec& o) const {
    return field_ == o.field_ && vars_ == o.vars_ && weights_ == o.weights_ && homog_var_ == o.homog_var_;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

}  // namespace satelim
