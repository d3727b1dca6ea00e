#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mbmod/scalar.hpp"

namespace mbmod {

/// Dense 0-based id of a basis vector (V side or W side by context).
using Index = std::uint32_t;

/// One nonzero product: v_i w_j = c * v_k.  Absence of a pair (i, j)
/// means v_i w_j = 0; a stored c is never zero.
struct Entry {
    Index i = 0;
    Index j = 0;
    Index k = 0;
    Scalar c;

    bool operator==(const Entry&) const = default;
};

/// The validated sparse action of W-basis vectors on V-basis vectors.
/// Immutable after build_table; every query below is a pure function and
/// safe to call concurrently.
///
/// entries() is sorted by (i, j) and holds at most one entry per pair --
/// that uniqueness is the multiplicative-basis condition itself.  The
/// derived target-side index (column_into) is the exact transpose of the
/// entry list, rebuilt deterministically at construction.
class ActionTable {
public:
    std::size_t v_size() const { return v_size_; }
    std::size_t w_size() const { return w_size_; }
    const FieldSpec& field() const { return field_; }

    std::span<const Entry> entries() const { return entries_; }

    /// Entries with source index i, sorted by j.
    std::span<const Entry> row(Index i) const;

    /// The entry for the pair (i, j), or nullptr when v_i w_j = 0.
    const Entry* find_entry(Index i, Index j) const;

    /// Ids of the entries targeting k (that is, with v_k on the right-hand
    /// side), sorted by (j, i).  Index into entries().
    std::span<const std::uint32_t> column_into(Index k) const;

    const std::optional<std::vector<std::string>>& v_labels() const { return v_labels_; }
    const std::optional<std::vector<std::string>>& w_labels() const { return w_labels_; }
    std::optional<Index> v_id_of_label(std::string_view label) const;
    std::optional<Index> w_id_of_label(std::string_view label) const;

    /// Structural equality: sizes, field, entries, labels.  The derived
    /// indexes are deterministic functions of these, so they are not compared.
    bool operator==(const ActionTable& rhs) const;

private:
    friend ActionTable build_table(std::vector<Entry> entries, std::size_t v_size,
                                   std::size_t w_size, const FieldSpec& field,
                                   std::optional<std::vector<std::string>> v_labels,
                                   std::optional<std::vector<std::string>> w_labels);

    ActionTable() = default;

    std::size_t v_size_ = 0;
    std::size_t w_size_ = 0;
    FieldSpec field_{};
    std::vector<Entry> entries_;                // sorted by (i, j)
    std::vector<std::size_t> row_begin_;        // v_size_+1 offsets into entries_
    std::vector<std::uint32_t> target_order_;   // entry ids sorted by (k, j, i)
    std::vector<std::size_t> target_begin_;     // v_size_+1 offsets into target_order_
    std::optional<std::vector<std::string>> v_labels_;
    std::optional<std::vector<std::string>> w_labels_;
    std::unordered_map<std::string, Index> v_label_ids_;
    std::unordered_map<std::string, Index> w_label_ids_;
};

/// Validates and indexes an action table.
///
/// Errors: DuplicatePair for two entries on one (i, j); ZeroCoefficient
/// (zero action must be expressed by absence); IndexOutOfRange;
/// NonPrimeModulus for an invalid field; FieldMismatch for a coefficient
/// from another field; ParseError for malformed label sets.
/// Empty I or empty J are legal degenerate instances.
ActionTable build_table(std::vector<Entry> entries, std::size_t v_size, std::size_t w_size,
                        const FieldSpec& field,
                        std::optional<std::vector<std::string>> v_labels = std::nullopt,
                        std::optional<std::vector<std::string>> w_labels = std::nullopt);

enum class Space : std::uint8_t { v, w };

/// Sparse coordinate vector over the V- or W-basis: sorted by index,
/// duplicate-free, all stored scalars nonzero.  The constructor
/// canonicalizes (sorts, sums duplicate indices, drops zeros).
class CoordVector {
public:
    using Term = std::pair<Index, Scalar>;

    explicit CoordVector(Space s) : space_(s) {}
    CoordVector(Space s, std::vector<Term> terms);

    static CoordVector unit(Space s, Index idx, const FieldSpec& fs);

    Space space() const { return space_; }
    std::span<const Term> terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    bool operator==(const CoordVector&) const = default;

private:
    Space space_;
    std::vector<Term> terms_;
};

/// Evaluates the bilinear action on coordinate vectors:
/// sum over (i,a) in v and (j,b) in w of a*b*c*e_k for entries (i,j,k,c).
/// Coordinates that cancel to zero are dropped.
CoordVector apply_action(const ActionTable& t, const CoordVector& v, const CoordVector& w);

CoordVector add(const CoordVector& a, const CoordVector& b);
CoordVector scale(const Scalar& c, const CoordVector& a);

/// Thread cap from MBMOD_THREADS (0 or unset = auto).  Current operations
/// are single-pass sequential, so the cap is an upper bound they stay under.
unsigned max_threads();

} // namespace mbmod
