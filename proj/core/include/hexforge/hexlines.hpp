#pragma once

#include <optional>
#include <vector>

#include "hexforge/construct.hpp"
#include "hexforge/tower.hpp"

namespace hexforge {

// One degenerate fibre class of the conic bundle: the irreducible factor m of
// F stands for deg(m) conjugate geometric fibres sharing this symbolic data.
// The fibre conic is M(1, t0) for t0 the class of x in Q[x]/(m); it factors as
// a product of two lines over the stored tower.
struct SplitFibre {
  QPoly m;
  int embeddings;  // deg m: number of geometric fibres represented
  TowerField tower;
  TowerField::Elem d;      // square class of the splitting: here d = t0
  bool used_sqrt_floor;    // false when t0 is already a square on floor one
  LinearForm<TowerField> line_plus, line_minus;  // normalized, distinct
  TowerField::Elem product_unit;  // product_unit * (l+ l-) = fibre conic
  TernaryForm<TowerField> fibre_conic;
};

// Exact statement: the restriction of Q to the line, parametrized by
// u*p1 + v*p2, equals gamma * q^2 in the tower.
struct BitangencyCertificate {
  std::array<TowerField::Elem, 3> p1, p2;
  BinaryForm<TowerField> restriction;
  BinaryForm<TowerField> q;
  TowerField::Elem gamma;
};

struct FibreReport {
  SplitFibre fibre;
  BitangencyCertificate cert_plus, cert_minus;
  int tower_degree_over_Q;  // divides 2 * deg m
};

struct HexadReport {
  QuarticModel<Rationals> model;
  std::vector<FibreReport> fibres;  // one entry per irreducible factor of F
  int total_lines = 0;              // counted with embeddings; 12 on success
  bool lines_distinct = false;      // certified by a separability argument
};

// Split the degenerate fibre over the root class of an irreducible factor m | F.
SplitFibre split_fibre(const ConicBundleModel<Rationals>& model, const QPoly& m);

// Restrict Q to the line and certify that the restriction is a unit times a
// perfect square; nullopt when the line is not a bitangent.
std::optional<BitangencyCertificate> bitangency_certificate(
    const TowerField& L, const TernaryForm<Rationals>& Q, const LinearForm<TowerField>& line);

// Factor F, split all fibres, certify the twelve bitangents of the
// distinguished hexad. Throws NotSmooth when the quartic is singular.
// Fibres are independent; jobs > 1 processes them concurrently and merges by
// fibre index.
HexadReport hexad_report(const SexticInput<Rationals>& input, Sign sign, int jobs = 1);

}  // namespace hexforge
