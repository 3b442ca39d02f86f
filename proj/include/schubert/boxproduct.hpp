#pragma once

// Euler characteristics chi(u,v,w) of the open triple intersections
// X_{w_o u} cap X^v cap g X_w and the deformed product
// epsilon^u [] epsilon^v = sum_{l(w) >= l(u)+l(v)} chi(u,v,w) epsilon^w.
//
// chi is computed three ways: the triple-sum formula over CSM coefficients
// and triple intersection numbers, the pairing of c_SM(X_{w_o u}^v) with
// s_SM(X_w), and the CSM-basis coefficient d^{w_o u, v}_{w_o w}.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "schubert/richardson.hpp"

namespace schubert {

/// The three values of chi(u, v, w) for one (u, v) and every w.
struct ChiRow {
    std::vector<Int> triple_sum;
    std::vector<Int> pairing;
    std::vector<Int> richardson;
    /// Sign condition on the c_SM-basis coefficients of X_{w_o u}^v.
    bool richardson_sign_ok = true;
};

class BoxProduct {
public:
    explicit BoxProduct(std::shared_ptr<const Richardson> richardson);

    const Richardson& richardson() const { return *rich_; }
    const Csm& csm() const { return rich_->csm(); }
    const Cohomology& cohomology() const { return rich_->cohomology(); }
    const WeylGroup& group() const { return rich_->group(); }

    Int chi_via_triple_sum(const WeylElement& u, const WeylElement& v, const WeylElement& w) const;
    Int chi_via_pairing(const WeylElement& u, const WeylElement& v, const WeylElement& w) const;
    Int chi_via_richardson(const WeylElement& u, const WeylElement& v, const WeylElement& w) const;

    /// All three paths for every w at once.
    ChiRow chi_row(const WeylElement& u, const WeylElement& v) const;
    /// Only the richardson path (and its sign flag).
    ChiRow chi_row_richardson_only(const WeylElement& u, const WeylElement& v) const;

    /// chi(u,v,w) with all three paths compared; throws PathDisagreement.
    Int chi(const WeylElement& u, const WeylElement& v, const WeylElement& w) const;

    /// epsilon^u [] epsilon^v, every coefficient cross-checked by all paths.
    CohomologyClass box_product(const WeylElement& u, const WeylElement& v) const;
    /// Bilinear extension.
    CohomologyClass box_product(const CohomologyClass& a, const CohomologyClass& b) const;

private:
    std::vector<Int> triple_sum_row(const WeylElement& u, const WeylElement& v) const;
    std::vector<Int> pairing_row(const CohomologyClass& r) const;
    ChiRow richardson_part(const WeylElement& u, const WeylElement& v, const CohomologyClass& r) const;

    std::shared_ptr<const Richardson> rich_;
    std::vector<std::uint32_t> wo_times_; // index of w_o x
};

/// Throws PathDisagreement naming the triple and the three values.
void check_paths_agree(const WeylGroup& g, std::uint32_t u, std::uint32_t v, const ChiRow& row);

/// chi(u,v,w) for all triples, with per-entry provenance.
class BoxTable {
public:
    BoxTable() = default;
    explicit BoxTable(std::size_t order);

    std::size_t order() const { return n_; }
    Int chi(std::uint32_t u, std::uint32_t v, std::uint32_t w) const { return chi_[at(u, v, w)]; }
    Int triple_sum_value(std::uint32_t u, std::uint32_t v, std::uint32_t w) const { return triple_[at(u, v, w)]; }
    Int pairing_value(std::uint32_t u, std::uint32_t v, std::uint32_t w) const { return pairing_[at(u, v, w)]; }
    /// True when all three paths were computed (and agreed) for (u, v).
    bool cross_checked(std::uint32_t u, std::uint32_t v) const { return checked_[u * n_ + v] != 0; }
    bool richardson_sign_ok(std::uint32_t u, std::uint32_t v) const { return sign_ok_[u * n_ + v] != 0; }
    std::size_t cross_checked_pairs() const;

    void set_row(std::uint32_t u, std::uint32_t v, const ChiRow& row, bool cross_checked);

    const std::vector<Int>& chi_entries() const { return chi_; }
    const std::vector<Int>& triple_entries() const { return triple_; }
    const std::vector<Int>& pairing_entries() const { return pairing_; }
    const std::vector<std::uint8_t>& checked_flags() const { return checked_; }
    const std::vector<std::uint8_t>& sign_flags() const { return sign_ok_; }
    static BoxTable from_parts(std::size_t order, std::vector<Int> chi, std::vector<Int> triple,
                               std::vector<Int> pairing, std::vector<std::uint8_t> checked,
                               std::vector<std::uint8_t> sign_ok);

    friend bool operator==(const BoxTable&, const BoxTable&) = default;

private:
    std::size_t at(std::uint32_t u, std::uint32_t v, std::uint32_t w) const
    {
        return (static_cast<std::size_t>(u) * n_ + v) * n_ + w;
    }

    std::size_t n_ = 0;
    std::vector<Int> chi_, triple_, pairing_;
    std::vector<std::uint8_t> checked_, sign_ok_;
};

/// Pairs (u, v) whose three paths are all computed: every pair when
/// |W| <= full_limit, else an evenly spaced sample of about sample_pairs.
struct CrossCheckPolicy {
    std::size_t full_limit = 48;
    std::size_t sample_pairs = 2000;
    bool selects(std::size_t order, std::uint32_t u, std::uint32_t v) const;
};

/// Builds the table, splitting the u range over `jobs` threads; the result
/// does not depend on `jobs`.
BoxTable build_box_table(const BoxProduct& box, const CrossCheckPolicy& policy = {}, int jobs = 1);

struct Triple {
    std::uint32_t u, v, w;
    Int value;
    friend bool operator==(const Triple&, const Triple&) = default;
};

struct BoxFindings {
    std::size_t triples_checked = 0;
    std::vector<Triple> conj_d_violations;     // (-1)^{dim} chi < 0
    std::vector<Triple> below_threshold;       // chi != 0 with l(w) < l(u)+l(v)
    std::vector<Triple> gr_mismatches;         // hard: chi != cup constant at l(w) = l(u)+l(v)
    // Hard: the chi signs for (u, v) over all w disagree with the c_SM-basis signs of X_{w_o u}^v.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> sign_equivalence_mismatches;
    bool associativity_tested = false;
    std::size_t associativity_triples = 0;
    std::size_t associativity_failures = 0;
    // (a, b, c) with value = the first index z where the two sides differ.
    std::vector<Triple> associativity_witnesses;
};

struct AssociativityResult {
    std::size_t triples = 0;
    std::size_t failures = 0;
    std::vector<Triple> witnesses; // first 20; value = first index z where the sides differ
};

/// Compares (e^a [] e^b) [] e^c with e^a [] (e^b [] e^c) for all a, b, c.
AssociativityResult check_associativity(const WeylGroup& g, const BoxTable& table);

/// chi signs, gr = cup, the chi-sign / c_SM-basis-sign equivalence, vanishing below
/// the dimension threshold, and (for |W| <= associativity_limit) an
/// empirical associativity sweep.
BoxFindings verify_box_conjectures(const BoxProduct& box, const BoxTable& table,
                                   std::size_t associativity_limit = 48);

} // namespace schubert
