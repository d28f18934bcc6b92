#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "numerics.hpp"
#include "partitions.hpp"

namespace partdyn {

// One linear branch of a multidimensional continued-fraction map: the branch
// applies iff pred . parts > 0 (first matching branch wins; no match means the
// state lies on a dividing boundary). parts_mat acts on the parts vector,
// mults_mat on the multiplicity vector; mults_mat may have negative entries.
struct ZooBranch {
    std::string label;
    std::vector<Int> pred;
    IntMat parts_mat;
    IntMat mults_mat;
};

struct MapDef {
    std::string name;
    int dim = 0;
    std::vector<ZooBranch> branches;
};

// Throws std::domain_error unless every branch satisfies
// mults_mat^T * parts_mat = I, which is exactly weight conservation:
// (B k).(A n) = k.n for all k, n.
void validate_mapdef(const MapDef& def);

// Builtin map definitions (validated before return).
MapDef mapdef_triangle(int m);
MapDef mapdef_monkemeyer();
MapDef mapdef_cassaigne();
MapDef mapdef_t12e12();
// Twin of a two-branch map: same dynamics, branch labels exchanged, so the
// twin's branch 0 acts by its partner's branch-1 matrices and vice versa.
MapDef mapdef_twin(const MapDef& base, const std::string& name);
MapDef mapdef_t13_12_12();  // twin of the three-dimensional triangle map
MapDef mapdef_t132_12_e();  // twin of t12e12
// Lookup by identifier ("triangle" honors m; the rest require m = 3).
MapDef mapdef_builtin(const std::string& name, int m = 3);

// JSON round-trip: {"name", "dim", "branches": [{"label", "pred",
// "parts", "mults"}]} with matrices as row-major arrays of arrays.
MapDef mapdef_from_json(const nlohmann::json& j);
nlohmann::ordered_json mapdef_to_json(const MapDef& def);
MapDef mapdef_load_file(const std::string& path);

// A (parts, mults) pair whose multiplicities may be negative; such a state is
// deliberately distinct from Partition so it cannot leak into partition code.
struct SignedState {
    std::vector<Int> parts;
    std::vector<Int> mults;

    Int weight() const;
    bool any_negative_mult() const;
    std::string str() const;  // "(7,5,4)x[3,2,-4]"
    bool operator==(const SignedState& other) const = default;
};

SignedState signed_state_of(const Partition& p);

enum class ZooStepKind { applied, boundary };

struct ZooStepResult {
    ZooStepKind kind = ZooStepKind::boundary;
    int branch = -1;        // index into def.branches when kind == applied
    SignedState state;      // image when kind == applied
    bool negative = false;  // image has a negative multiplicity
};

// Applies the first branch whose predicate holds; boundary result if none.
// Requires strictly decreasing positive parts of length def.dim.
ZooStepResult zoo_step(const MapDef& def, const SignedState& s);

// Applies a chosen branch unconditionally (used by the twinning identities).
SignedState zoo_apply_branch(const MapDef& def, int branch, const SignedState& s);

// Named single-step maps on three-distinct-part partitions. Each throws
// std::domain_error on its dividing boundary.
ZooStepResult monkemeyer_step(const Partition& p);  // boundary: n2 + n3 = n1
ZooStepResult cassaigne_step(const Partition& p);   // boundary: n2 + n3 = n1

struct ZooPartitionStep {
    int branch;
    Partition state;
};

ZooPartitionStep t12e12_step(const Partition& p);  // boundary: 2*n3 = n2
// which is "t13_12_12" or "t132_12_e".
ZooPartitionStep twin_step(const std::string& which, const Partition& p);

// Orbit of a signed state, stopping at a boundary, at the first image with a
// negative multiplicity, or where the image's parts leave the cone of
// strictly decreasing positive vectors.
enum class ZooOrbitEnd { boundary, negative, left_cone };

struct ZooOrbit {
    SignedState root;
    struct Step {
        int branch;  // branch applied to the previous state
        SignedState state;
    };
    std::vector<Step> steps;
    ZooOrbitEnd end = ZooOrbitEnd::boundary;
};

ZooOrbit zoo_orbit(const MapDef& def, const SignedState& root,
                   std::size_t max_steps = 100000);

struct ZooCounterexample {
    SignedState input;         // nonnegative state the map was applied to
    std::string branch_label;  // branch that produced the negative image
    SignedState output;        // image with a negative multiplicity
};

struct ClassifierVerdict {
    std::string map_name;
    int dim = 0;
    std::int64_t weight_bound = 0;
    bool partition_safe = true;
    std::optional<ZooCounterexample> counterexample;
    std::int64_t roots = 0;   // roots swept
    std::int64_t states = 0;  // distinct states visited
};

// Sweeps every root (n1,...,nm) x [1,0,...,0] with strictly decreasing parts
// and weight n1 <= weight_bound, in weight-ascending then parts-lexicographic
// order, following each orbit to a boundary or a previously visited state.
// partition_safe is false iff some reachable image has a negative
// multiplicity; the stored counterexample is the first in sweep order.
ClassifierVerdict classify(const MapDef& def, int m, std::int64_t weight_bound);

nlohmann::ordered_json verdict_to_json(const ClassifierVerdict& v);

// Witness that t12e12 fails the per-step conjugation diagram
// conjugate(lambda) = T(conjugate(T(lambda))): either the inner image's
// conjugate leaves the map's domain (boundary or wrong part count), or the
// diagram's two sides disagree.
struct ConjugationFailure {
    Partition input;                  // lambda, off the boundary
    int branch;                       // branch applied to lambda
    Partition image;                  // T(lambda)
    Partition expected;               // conjugate(lambda)
    bool conjugate_outside_domain;    // conjugate(T(lambda)) not steppable
    std::optional<Partition> actual;  // T(conjugate(T(lambda))) when defined
};

// First failure over partitions with exactly three distinct parts, weight
// ascending, skipping inputs that lie on the boundary themselves.
ConjugationFailure t12e12_conjugation_failure(const Int& weight_limit = 1000);

}  // namespace partdyn
