#ifndef GW_CORRELATORS_HPP
#define GW_CORRELATORS_HPP

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gw/genus0.hpp"
#include "gw/target.hpp"

namespace gw {

// Canonical key of one Gromov-Witten invariant <tau_{m_1}(T_{a_1})...>_{g,d}
// of P^r. Insertions are kept sorted ascending by (m, a).
struct InvKey {
    int r = 0;
    int g = 0;
    long d = 0;
    std::vector<Insertion> ins;

    void canonicalize();
    friend auto operator<=>(const InvKey&, const InvKey&) = default;
};

// Key of an auxiliary correlator <tau_m(T_a) T_{second} extras>^i_e. The
// second entry never carries a cotangent line class. `extras` holds spectator
// insertions produced by coefficient extraction of the correlation-function
// recursion; persisted records are restricted to the two-entry case.
struct AuxKey {
    int r = 0;
    long i = 0;
    Insertion first{};
    ClassIndex second = 0;
    long e = 0;
    std::vector<Insertion> extras;

    void canonicalize();
    friend auto operator<=>(const AuxKey&, const AuxKey&) = default;
};

// Idempotent memo of computed values; re-inserting a key with a different
// value is a hard error (determinism violation).
class Cache {
public:
    std::optional<Rat> find_inv(const InvKey& k) const;
    std::optional<Rat> find_aux(const AuxKey& k) const;
    void insert_inv(const InvKey& k, const Rat& v);
    void insert_aux(const AuxKey& k, const Rat& v);
    size_t size() const { return inv_.size() + aux_.size(); }

    void save(std::ostream& out) const;
    // Parses and merges records; parse errors name the offending line,
    // merge conflicts (same key, different value) are errors.
    void load(std::istream& in);

private:
    std::map<InvKey, Rat> inv_;
    std::map<AuxKey, Rat> aux_;
};

struct EngineStats {
    long family_solves = 0;
    long genus0_queries = 0;
    long aux_evals = 0;
};

// Front door to the whole computation: resolves invariants through the
// convention values, the dimension gate, the genus-0 engine, and (for
// genus >= 1) the Virasoro family solver.
class Engine {
public:
    explicit Engine(bool verify = false) : verify_(verify) {}

    // Virtual value of Convention (conv) cases (i)-(ii) and the genus-0
    // degree-0 multinomial formula; 0 for negative descendant indices outside
    // the convention cases; nullopt for genuine stable-range keys.
    std::optional<Rat> convention_value(const InvKey& key) const;

    Rat invariant(InvKey key);

    // <tau_m(T_a) T_{second} extras>^i_e by the defining recursion
    //   <tau_m g1 g2 E>^i = <tau_{m+1} g1 g2 E>^{i-1}
    //                       - sum <tau_m(g1) T_c E1>_0 <T^c g2 E2>^{i-1}
    // bottoming out at i = 0 in genus-0 invariants (with conventions).
    Rat aux(AuxKey key);

    Genus0Engine& genus0(int r);
    Cache& cache() { return cache_; }
    EngineStats& stats() { return stats_; }
    bool verify() const { return verify_; }

    bool family_solved(const Context& ctx) const;
    void mark_family_solved(const Context& ctx);

private:
    bool verify_;
    Cache cache_;
    std::map<AuxKey, Rat> aux_memo_; // includes extras-bearing keys
    std::map<int, std::unique_ptr<Genus0Engine>> g0_;
    std::set<std::tuple<int, int, std::vector<Insertion>>> solved_;
    EngineStats stats_;
};

} // namespace gw

#endif
