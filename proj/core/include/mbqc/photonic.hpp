#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mbqc/state.hpp"

namespace mbqc {

class PhotonRegister;
struct FusionOutcome;

FusionOutcome fuse(const PhotonRegister& reg, int a, int b, std::mt19937_64& rng);
FusionOutcome fuse_forced(const PhotonRegister& reg, int a, int b);

// Register of photonic qubit modes, labeled 1..num_modes. Modes are
// never removed from the underlying state; a failed fusion marks its
// two modes as lost and later operations on them are rejected. Every
// mode must be explicitly prepared (single |+> or an entangled pair)
// before it can be rotated or fused.
class PhotonRegister {
  public:
    explicit PhotonRegister(int num_modes);

    int num_modes() const { return static_cast<int>(prepared_.size()); }
    bool prepared(int mode) const { return prepared_[check(mode)]; }
    bool alive(int mode) const { return !lost_[check(mode)]; }
    const StateVector& state() const { return state_; }

    void set_plus(int mode);
    // Writes (1 x H)(|HH> + |VV>)/sqrt(2) on two fresh modes, which is
    // the CZ|++> pair used as the seed of a chip network.
    void set_pair(int a, int b);
    void rotate(int mode, const Gate1Q& g);

  private:
    friend FusionOutcome fuse(const PhotonRegister&, int, int, std::mt19937_64&);
    friend FusionOutcome fuse_forced(const PhotonRegister&, int, int);

    std::size_t check(int mode) const;
    std::size_t require_fresh(int mode);
    std::size_t require_usable(int mode) const;
    // Born weight of the equal-polarization subspace of two modes.
    double equal_weight(std::size_t sa, std::size_t sb) const;
    // Keeps the equal (or unequal) subspace and renormalizes.
    PhotonRegister projected(std::size_t sa, std::size_t sb, bool keep_equal) const;

    StateVector state_;
    std::vector<bool> prepared_;
    std::vector<bool> lost_;
};

// Result of a type-II style parity fusion on two modes: success
// projects onto equal polarizations, failure projects onto the
// complement and loses both modes. probability is the Born weight of
// the branch actually taken. fuse samples the branch; fuse_forced takes
// the success branch unconditionally and throws ImpossibleBranchError
// when that branch has (near-)zero probability.
struct FusionOutcome {
    bool success = false;
    double probability = 0.0;
    PhotonRegister post_state;
};

// Grows a cluster by one branch: fuse the attachment end of `pair` to
// the first fresh mode, Hadamard it, fuse it to the second fresh mode,
// Hadamard that. Both fresh modes must hold |+>; pair.second names the
// vertex the branch hangs off. success requires both fusions to succeed
// and probability multiplies along the taken path.
FusionOutcome build_branch(const PhotonRegister& reg, std::pair<int, int> pair,
                           std::pair<int, int> fresh, std::mt19937_64& rng);

// One instruction of a fusion network program.
struct NetworkOp {
    enum class Kind { plus, pair, rotate, fuse };
    Kind kind = Kind::plus;
    int a = 0;
    int b = 0;            // pair and fuse
    std::string gate;     // rotate: h, x, y, z, rz
    double angle = 0.0;   // rotate with gate rz
};

struct FusionNetwork {
    int num_modes = 0;
    std::vector<NetworkOp> ops;
    std::optional<StateVector> target_state;
};

// The six-mode network that assembles the DJ/BV resource: seed a pair
// on modes 3 and 4, then hang the remaining four modes off it one
// fusion at a time. All five fusions succeeding has probability 2^-5.
FusionNetwork default_chip_network();

struct ChipRun {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double empirical_probability = 0.0;
    double analytic_probability = 0.0;
    // State conditioned on every fusion succeeding; absent when the
    // success path itself is impossible.
    std::optional<StateVector> conditional_state;
    // Fidelity against the network's target_state, when both exist.
    std::optional<double> target_fidelity;
};

// Runs the network once along the forced success path (for the analytic
// probability and conditional state), then `trials` sampled attempts,
// each aborted at its first failed fusion.
ChipRun generate_chip_state(const FusionNetwork& net, std::uint64_t trials,
                            std::mt19937_64& rng);

// Success probability of extending the scheme to n branches: each
// branch costs two fusions, (1/4)^n overall. Defined for n >= 2.
struct ScalingEstimate {
    int branches = 0;
    double probability = 0.0;
};

ScalingEstimate scaling_success_probability(int n);

std::string to_text(const FusionNetwork& net);
FusionNetwork network_from_text(const std::string& text);

}  // namespace mbqc
