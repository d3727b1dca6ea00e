#include "mbmod/table.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <thread>

namespace mbmod {

namespace {

std::string pair_str(Index i, Index j) {
    return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

void check_labels(const std::vector<std::string>& labels, std::size_t size, const char* side,
                  std::unordered_map<std::string, Index>& ids) {
    if (labels.size() != size)
        fail(errc::parse_error, std::string(side) + "_labels has " + std::to_string(labels.size()) +
                                    " entries, expected " + std::to_string(size));
    ids.reserve(labels.size());
    for (std::size_t n = 0; n < labels.size(); ++n) {
        auto [it, fresh] = ids.emplace(labels[n], static_cast<Index>(n));
        if (!fresh)
            fail(errc::parse_error,
                 std::string(side) + "_labels repeats '" + labels[n] + "'");
    }
}

} // namespace

std::span<const Entry> ActionTable::row(Index i) const {
    if (i >= v_size_) fail(errc::index_out_of_range, "V-index " + std::to_string(i));
    return {entries_.data() + row_begin_[i], row_begin_[i + 1] - row_begin_[i]};
}

const Entry* ActionTable::find_entry(Index i, Index j) const {
    auto r = row(i);
    auto it = std::lower_bound(r.begin(), r.end(), j,
                               [](const Entry& e, Index jj) { return e.j < jj; });
    if (it != r.end() && it->j == j) return &*it;
    return nullptr;
}

std::span<const std::uint32_t> ActionTable::column_into(Index k) const {
    if (k >= v_size_) fail(errc::index_out_of_range, "V-index " + std::to_string(k));
    return {target_order_.data() + target_begin_[k], target_begin_[k + 1] - target_begin_[k]};
}

std::optional<Index> ActionTable::v_id_of_label(std::string_view label) const {
    auto it = v_label_ids_.find(std::string(label));
    if (it == v_label_ids_.end()) return std::nullopt;
    return it->second;
}

std::optional<Index> ActionTable::w_id_of_label(std::string_view label) const {
    auto it = w_label_ids_.find(std::string(label));
    if (it == w_label_ids_.end()) return std::nullopt;
    return it->second;
}

bool ActionTable::operator==(const ActionTable& rhs) const {
    return v_size_ == rhs.v_size_ && w_size_ == rhs.w_size_ && field_ == rhs.field_ &&
           entries_ == rhs.entries_ && v_labels_ == rhs.v_labels_ && w_labels_ == rhs.w_labels_;
}

ActionTable build_table(std::vector<Entry> entries, std::size_t v_size, std::size_t w_size,
                        const FieldSpec& field,
                        std::optional<std::vector<std::string>> v_labels,
                        std::optional<std::vector<std::string>> w_labels) {
    if (field.kind == FieldSpec::Kind::prime && !is_prime_u64(field.modulus))
        fail(errc::non_prime_modulus, "modulus " + std::to_string(field.modulus) + " is not prime");
    constexpr std::size_t index_cap = std::numeric_limits<Index>::max();
    if (v_size > index_cap || w_size > index_cap)
        fail(errc::index_out_of_range, "basis too large for 32-bit ids");
    if (entries.size() > index_cap)
        fail(errc::size_limit_exceeded, "entry count exceeds 32-bit ids");

    for (const Entry& e : entries) {
        if (e.i >= v_size)
            fail(errc::index_out_of_range, "entry source " + std::to_string(e.i));
        if (e.k >= v_size)
            fail(errc::index_out_of_range, "entry target " + std::to_string(e.k));
        if (e.j >= w_size)
            fail(errc::index_out_of_range, "entry column " + std::to_string(e.j));
        if (e.c.field() != field)
            fail(errc::field_mismatch, "coefficient at " + pair_str(e.i, e.j) + " is from " +
                                           e.c.field().str() + ", table is " + field.str());
        if (e.c.is_zero())
            fail(errc::zero_coefficient, "zero coefficient at " + pair_str(e.i, e.j) +
                                             "; zero action is expressed by absence");
    }

    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    });
    for (std::size_t n = 1; n < entries.size(); ++n) {
        if (entries[n - 1].i == entries[n].i && entries[n - 1].j == entries[n].j)
            fail(errc::duplicate_pair,
                 "duplicate pair " + pair_str(entries[n].i, entries[n].j));
    }

    ActionTable t;
    t.v_size_ = v_size;
    t.w_size_ = w_size;
    t.field_ = field;
    t.entries_ = std::move(entries);

    t.row_begin_.assign(v_size + 1, 0);
    for (const Entry& e : t.entries_) ++t.row_begin_[e.i + 1];
    for (std::size_t n = 1; n <= v_size; ++n) t.row_begin_[n] += t.row_begin_[n - 1];

    t.target_order_.resize(t.entries_.size());
    for (std::uint32_t n = 0; n < t.target_order_.size(); ++n) t.target_order_[n] = n;
    std::sort(t.target_order_.begin(), t.target_order_.end(),
              [&es = t.entries_](std::uint32_t a, std::uint32_t b) {
                  const Entry &x = es[a], &y = es[b];
                  if (x.k != y.k) return x.k < y.k;
                  if (x.j != y.j) return x.j < y.j;
                  return x.i < y.i;
              });
    t.target_begin_.assign(v_size + 1, 0);
    for (const Entry& e : t.entries_) ++t.target_begin_[e.k + 1];
    for (std::size_t n = 1; n <= v_size; ++n) t.target_begin_[n] += t.target_begin_[n - 1];

    if (v_labels) check_labels(*v_labels, v_size, "v", t.v_label_ids_);
    if (w_labels) check_labels(*w_labels, w_size, "w", t.w_label_ids_);
    t.v_labels_ = std::move(v_labels);
    t.w_labels_ = std::move(w_labels);
    return t;
}

CoordVector::CoordVector(Space s, std::vector<Term> terms) : space_(s) {
    std::stable_sort(terms.begin(), terms.end(),
                     [](const Term& a, const Term& b) { return a.first < b.first; });
    terms_.reserve(terms.size());
    for (auto& term : terms) {
        if (!terms_.empty() && terms_.back().first == term.first) {
            terms_.back().second += term.second; // field_mismatch surfaces here
            if (terms_.back().second.is_zero()) terms_.pop_back();
        } else if (!term.second.is_zero()) {
            if (!terms_.empty() && terms_.back().second.field() != term.second.field())
                fail(errc::field_mismatch, "mixed fields in one coordinate vector");
            terms_.push_back(std::move(term));
        }
    }
}

CoordVector CoordVector::unit(Space s, Index idx, const FieldSpec& fs) {
    return CoordVector(s, {{idx, Scalar::one(fs)}});
}

CoordVector apply_action(const ActionTable& t, const CoordVector& v, const CoordVector& w) {
    if (v.space() != Space::v || w.space() != Space::w)
        throw std::invalid_argument("apply_action needs a V-vector and a W-vector");
    for (const auto& [i, a] : v.terms()) {
        if (i >= t.v_size()) fail(errc::index_out_of_range, "V-coordinate " + std::to_string(i));
        if (a.field() != t.field())
            fail(errc::field_mismatch, "vector scalars are from " + a.field().str());
    }
    for (const auto& [j, b] : w.terms()) {
        if (j >= t.w_size()) fail(errc::index_out_of_range, "W-coordinate " + std::to_string(j));
        if (b.field() != t.field())
            fail(errc::field_mismatch, "vector scalars are from " + b.field().str());
    }

    std::map<Index, Scalar> acc;
    for (const auto& [i, a] : v.terms()) {
        for (const auto& [j, b] : w.terms()) {
            const Entry* e = t.find_entry(i, j);
            if (e == nullptr) continue;
            Scalar contrib = a * b * e->c;
            auto [it, fresh] = acc.emplace(e->k, contrib);
            if (!fresh) it->second += contrib;
        }
    }
    std::vector<CoordVector::Term> terms;
    terms.reserve(acc.size());
    for (auto& [k, c] : acc) {
        if (!c.is_zero()) terms.emplace_back(k, std::move(c));
    }
    return CoordVector(Space::v, std::move(terms));
}

CoordVector add(const CoordVector& a, const CoordVector& b) {
    if (a.space() != b.space()) throw std::invalid_argument("adding vectors from different spaces");
    std::vector<CoordVector::Term> terms(a.terms().begin(), a.terms().end());
    terms.insert(terms.end(), b.terms().begin(), b.terms().end());
    return CoordVector(a.space(), std::move(terms));
}

CoordVector scale(const Scalar& c, const CoordVector& a) {
    std::vector<CoordVector::Term> terms;
    terms.reserve(a.terms().size());
    for (const auto& [idx, s] : a.terms()) terms.emplace_back(idx, c * s);
    return CoordVector(a.space(), std::move(terms));
}

unsigned max_threads() {
    const char* env = std::getenv("MBMOD_THREADS");
    if (env != nullptr) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

} // namespace mbmod
