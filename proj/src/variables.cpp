#include "cbn/variables.hpp"

#include <algorithm>
#include <cctype>

#include "cbn/errors.hpp"

namespace cbn {

namespace {

void check_name(const std::string& name) {
    if (name.empty()) throw InvalidArgument("empty variable name");
    auto ok_first = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    auto ok_rest = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; };
    if (!ok_first(name.front()) || !std::all_of(name.begin() + 1, name.end(), ok_rest)) {
        throw InvalidArgument("invalid variable name '" + name + "'");
    }
}

}  // namespace

VariableSet::VariableSet(std::initializer_list<std::string> names)
    : VariableSet(std::vector<std::string>(names)) {}

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (const auto& n : names_) check_name(n);
    std::sort(names_.begin(), names_.end());
    if (auto dup = std::adjacent_find(names_.begin(), names_.end()); dup != names_.end()) {
        throw InvalidArgument("duplicate variable '" + *dup + "'");
    }
}

std::optional<std::size_t> VariableSet::find(std::string_view name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name,
                               [](const std::string& a, std::string_view b) { return a < b; });
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

bool VariableSet::contains(std::string_view name) const { return find(name).has_value(); }

std::size_t VariableSet::position_of(std::string_view name) const {
    if (auto pos = find(name)) return *pos;
    throw InvalidArgument("unknown variable '" + std::string(name) + "' in " + to_string());
}

bool VariableSet::is_subset_of(const VariableSet& other) const {
    return std::includes(other.names_.begin(), other.names_.end(), names_.begin(), names_.end());
}

bool VariableSet::is_disjoint_from(const VariableSet& other) const {
    return set_intersection(*this, other).empty();
}

std::uint64_t VariableSet::num_assignments() const {
    if (names_.size() > kMaxDenseVariables) {
        throw CapacityError("variable set " + to_string() + " exceeds the dense limit of " +
                            std::to_string(kMaxDenseVariables) + " variables");
    }
    return std::uint64_t{1} << names_.size();
}

std::string VariableSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (i) out += ',';
        out += names_[i];
    }
    return out + "}";
}

VariableSet set_union(const VariableSet& a, const VariableSet& b) {
    std::vector<std::string> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VariableSet(std::move(out));
}

VariableSet set_intersection(const VariableSet& a, const VariableSet& b) {
    std::vector<std::string> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VariableSet(std::move(out));
}

VariableSet set_difference(const VariableSet& a, const VariableSet& b) {
    std::vector<std::string> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VariableSet(std::move(out));
}

VariableSet parse_variable_list(std::string_view text) {
    std::vector<std::string> names;
    std::string current;
    auto flush = [&] {
        if (!current.empty()) names.push_back(current);
        current.clear();
    };
    for (char c : text) {
        if (c == ',') {
            flush();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            current += c;
        }
    }
    flush();
    return VariableSet(std::move(names));
}

Assignment::Assignment(VariableSet variables, std::uint64_t index)
    : variables_(std::move(variables)), index_(index) {
    if (variables_.size() >= 64 || index_ >= (std::uint64_t{1} << variables_.size())) {
        throw InvalidArgument("assignment index " + std::to_string(index) + " out of range for " +
                              variables_.to_string());
    }
}

Assignment::Assignment(std::initializer_list<std::pair<std::string, bool>> values) {
    std::vector<std::string> names;
    for (const auto& [name, v] : values) names.push_back(name);
    variables_ = VariableSet(std::move(names));
    for (const auto& [name, v] : values) {
        if (v) index_ |= position_bit(variables_.position_of(name), variables_.size());
    }
}

Assignment Assignment::from_bitstring(VariableSet variables, std::string_view bits) {
    if (bits.size() != variables.size()) {
        throw InvalidArgument("bitstring '" + std::string(bits) + "' does not match " + variables.to_string());
    }
    std::uint64_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw InvalidArgument("bitstring '" + std::string(bits) + "' must use 0/1");
        index = (index << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return Assignment(std::move(variables), index);
}

bool Assignment::value(std::string_view name) const { return value_at(variables_.position_of(name)); }

Assignment Assignment::restrict_to(const VariableSet& subset) const {
    if (!subset.is_subset_of(variables_)) {
        throw InvalidArgument("cannot restrict " + to_string() + " to " + subset.to_string());
    }
    return Assignment(subset, Projection(variables_, subset)(index_));
}

std::string Assignment::bitstring() const { return index_bitstring(index_, variables_.size()); }

std::string Assignment::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        if (i) out += ',';
        out += variables_[i] + (value_at(i) ? "=T" : "=F");
    }
    return out + "}";
}

std::string index_bitstring(std::uint64_t index, std::size_t count) {
    std::string out(count, '0');
    for (std::size_t i = 0; i < count; ++i) {
        if (index & position_bit(i, count)) out[i] = '1';
    }
    return out;
}

Projection::Projection(const VariableSet& from, const VariableSet& to) {
    source_bits_.reserve(to.size());
    for (const auto& name : to) {
        source_bits_.push_back(position_bit(from.position_of(name), from.size()));
    }
}

std::uint64_t Projection::operator()(std::uint64_t index) const {
    std::uint64_t out = 0;
    for (auto bit : source_bits_) out = (out << 1) | static_cast<std::uint64_t>((index & bit) != 0);
    return out;
}

std::uint64_t Projection::embed(std::uint64_t sub_index) const {
    std::uint64_t out = 0;
    const std::size_t n = source_bits_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (sub_index & position_bit(i, n)) out |= source_bits_[i];
    }
    return out;
}

}  // namespace cbn
