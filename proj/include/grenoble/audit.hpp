#pragma once

#include <mutex>
#include <string>
#include <vector>

#include "grenoble/color.hpp"

namespace grenoble {

struct AuditCounts {
  int contexts = 0;
  int convergences = 0;
  int orders = 0;
  int twist_checks = 0;
  int pairs = 0;
  int recolorings = 0;
  int contractions = 0;
  int rungs = 0;
};

/// Re-checks every intermediate object of a coloring run against the
/// structural lemmas and records each failure as a line of text.
class AuditObserver : public ColorObserver {
public:
  void on_context(const StripContext& ctx, const Orders& orders) override;
  void on_convergence(const StripContext& ctx, const ConvergenceWitness& w,
                      const Hyperprism& resolved) override;
  void on_pairs(const StripContext& ctx, const PairList& pairs) override;
  void on_recolor(const Graph& part, const Coloring& before, const Coloring& after,
                  const PairList& pairs) override;
  void on_contraction(const Graph& g, VertexId a, VertexId b) override;

  AuditCounts counts() const;
  std::vector<std::string> violations() const;

private:
  void fail(const std::string& what);

  mutable std::mutex mutex_;
  AuditCounts counts_;
  std::vector<std::string> violations_;
};

/// Hyperprism lemmas for a context: the majors see two A and two B sides
/// completely, the chosen strip is good, outside components attach locally,
/// the C sides sit in different components of G - (M u A u B), every rung is
/// even, and no two 1-rungs converge.
std::vector<std::string> check_hyperprism_lemmas(const StripContext& ctx);

/// Antisymmetry and transitivity of every order and the twist property.
std::vector<std::string> check_orders(const StripContext& ctx, const Orders& orders,
                                      int* twist_checks = nullptr);

} // namespace grenoble
