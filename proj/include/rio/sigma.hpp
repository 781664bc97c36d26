#pragma once

#include <array>
#include <optional>
#include <vector>

#include "rio/hamming.hpp"

namespace rio {

// A bijection on {1, ..., 2^r - 1}, stored as sigma(k) for k = 1..2^r-1.
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int k) const;
    const std::vector<int>& images() const { return images_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;

  private:
    std::vector<int> images_;
};

enum class TripleKind { A, B };  // A: s1 + s2 != s3, B: s1 + s2 = s3
enum class QuadKind { A, B, C };
// A: s1..s4 linearly independent
// B: some reordering tau has s_tau(1) + s_tau(2) = s_tau(3)
// C: s1 + s2 + s3 + s4 = 0

const char* to_string(TripleKind k);
const char* to_string(QuadKind k);

struct SigmaResult {
    Permutation sigma;
    bool backtracked = false;  // greedy smallest-index choices needed revision
};

struct TripleResult {
    Permutation sigma;
    TripleKind kind = TripleKind::A;
    bool backtracked = false;
};

struct QuadResult {
    Permutation sigma;
    QuadKind kind = QuadKind::A;
    // Reordering of the four inputs the sigma patterns are keyed to;
    // identity unless kind is B. tau[k] is 1-based.
    std::array<int, 4> tau{1, 2, 3, 4};
    bool backtracked = false;
};

// sigma such that V(s) = {{sigma(1)}, {sigma(2),sigma(3)}, ...,
// {sigma(2^r-2), sigma(2^r-1)}}. s must be nonzero.
SigmaResult sigma_single(const ParityCheckMatrix& H, const Syndrome& s);

// sigma interleaving V(s1) and V(s2): the head is {sigma(1)} in V(s1),
// {sigma(2)} in V(s2), {sigma(2),sigma(3)} in V(s1), {sigma(1),sigma(3)}
// in V(s2); each later block of four positions b, b+1, b+2, b+3 pairs as
// (b,b+1), (b+2,b+3) for s1 and (b,b+2), (b+1,b+3) for s2.
SigmaResult sigma_pair(const ParityCheckMatrix& H, const Syndrome& s1, const Syndrome& s2);

// Requires r = 4 and pairwise-distinct nonzero syndromes.
TripleResult sigma_triple(const ParityCheckMatrix& H, const Syndrome& s1, const Syndrome& s2,
                          const Syndrome& s3);
QuadResult sigma_quad(const ParityCheckMatrix& H, const Syndrome& s1, const Syndrome& s2,
                      const Syndrome& s3, const Syndrome& s4);

// Pattern validators: check that sigma decomposes the V-families exactly as
// the corresponding construction promises. These rebuild each V(s) from the
// matrix, independently of how sigma was produced.
bool check_sigma_single(const ParityCheckMatrix& H, const Syndrome& s, const Permutation& sigma);
bool check_sigma_pair(const ParityCheckMatrix& H, const Syndrome& s1, const Syndrome& s2,
                      const Permutation& sigma);
bool check_sigma_triple(const ParityCheckMatrix& H, const Syndrome& s1, const Syndrome& s2,
                        const Syndrome& s3, TripleKind kind, const Permutation& sigma);
bool check_sigma_quad(const ParityCheckMatrix& H, const Syndrome& s1, const Syndrome& s2,
                      const Syndrome& s3, const Syndrome& s4, QuadKind kind,
                      const std::array<int, 4>& tau, const Permutation& sigma);

// Positional pattern of one V-family under sigma: the singleton position and
// the position pairs, in pattern order. Used by the validators and by the
// CLI decomposition printer.
struct VPattern {
    int singleton;                          // 0 when the family has no singleton slot
    std::vector<std::pair<int, int>> pairs; // sigma positions
};
std::vector<VPattern> sigma_patterns_single(int n);
std::vector<VPattern> sigma_patterns_pair(int n);
std::vector<VPattern> sigma_patterns_triple(TripleKind kind);
std::vector<VPattern> sigma_patterns_quad(QuadKind kind);

}  // namespace rio
