#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cbn {

/// Upper bound on the number of variables of any dense table (2^20 entries).
inline constexpr std::size_t kMaxDenseVariables = 20;

/// A set of Boolean variables kept in canonical order (ascending by name).
///
/// The canonical order fixes the bit layout of assignment indices: the
/// first-sorted variable is the most significant bit, F = 0 and T = 1. For
/// {X, Y} the indices 0..3 therefore enumerate FF, FT, TF, TT.
class VariableSet {
public:
    VariableSet() = default;
    VariableSet(std::initializer_list<std::string> names);
    explicit VariableSet(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    bool empty() const { return names_.empty(); }
    const std::string& operator[](std::size_t position) const { return names_[position]; }
    const std::vector<std::string>& names() const { return names_; }
    auto begin() const { return names_.begin(); }
    auto end() const { return names_.end(); }

    bool contains(std::string_view name) const;
    std::optional<std::size_t> find(std::string_view name) const;
    /// Position of `name`; throws InvalidArgument for unknown names.
    std::size_t position_of(std::string_view name) const;

    bool is_subset_of(const VariableSet& other) const;
    bool is_disjoint_from(const VariableSet& other) const;

    /// 2^size(); throws CapacityError beyond kMaxDenseVariables.
    std::uint64_t num_assignments() const;

    /// Renders as "{X,Y}".
    std::string to_string() const;

    bool operator==(const VariableSet&) const = default;
    auto operator<=>(const VariableSet& other) const { return names_ <=> other.names_; }

private:
    std::vector<std::string> names_;
};

VariableSet set_union(const VariableSet& a, const VariableSet& b);
VariableSet set_intersection(const VariableSet& a, const VariableSet& b);
VariableSet set_difference(const VariableSet& a, const VariableSet& b);

/// Parses "X,Y,Z" (whitespace tolerated, empty string = empty set).
VariableSet parse_variable_list(std::string_view text);

/// Bit mask of the variable at `position` in a set of `count` variables.
inline std::uint64_t position_bit(std::size_t position, std::size_t count) {
    return std::uint64_t{1} << (count - 1 - position);
}

/// A total map from a VariableSet to {F, T}, stored as its canonical index.
class Assignment {
public:
    Assignment() = default;
    Assignment(VariableSet variables, std::uint64_t index);
    Assignment(std::initializer_list<std::pair<std::string, bool>> values);

    /// "10" over {X,Y} is {X=T, Y=F}; the empty set takes "".
    static Assignment from_bitstring(VariableSet variables, std::string_view bits);

    const VariableSet& variables() const { return variables_; }
    std::uint64_t index() const { return index_; }
    bool value(std::string_view name) const;
    bool value_at(std::size_t position) const {
        return (index_ & position_bit(position, variables_.size())) != 0;
    }

    Assignment restrict_to(const VariableSet& subset) const;

    std::string bitstring() const;
    /// Renders as "{X=T,Y=F}".
    std::string to_string() const;

    bool operator==(const Assignment&) const = default;

private:
    VariableSet variables_;
    std::uint64_t index_ = 0;
};

/// sum_i bit(b(v_i)) * 2^(n-1-i) over the canonical order.
inline std::uint64_t canonical_index(const Assignment& b) { return b.index(); }

/// Index bitstring for `index` over `count` variables (most significant first).
std::string index_bitstring(std::uint64_t index, std::size_t count);

/// Maps canonical indices over a set to canonical indices over one of its
/// subsets, and back (embedding with all other bits cleared).
class Projection {
public:
    Projection(const VariableSet& from, const VariableSet& to);

    std::uint64_t operator()(std::uint64_t index) const;
    std::uint64_t embed(std::uint64_t sub_index) const;

private:
    std::vector<std::uint64_t> source_bits_;  // one per target position
};

}  // namespace cbn
