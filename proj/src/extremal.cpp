#include "rdd/extremal.hpp"

#include <algorithm>
#include <cctype>

namespace rdd {

Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) b.connect(u, v);
  }
  return b.build();
}

Graph path_graph(int n) {
  GraphBuilder b(n);
  for (int u = 0; u + 1 < n; ++u) b.connect(u, u + 1);
  return b.build();
}

Graph cycle_graph(int n) {
  if (n < 3) throw RangeError("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) b.connect(u, (u + 1) % n);
  return b.build();
}

Graph star_graph(int leaves) {
  GraphBuilder b(leaves + 1);
  for (int v = 1; v <= leaves; ++v) b.connect(0, v);
  return b.build();
}

std::string_view family_name(Family f) { return f == Family::kCutVertex ? "cut-vertex" : "cut-edge"; }

Family parse_family(std::string_view text) {
  if (text == "cut-vertex" || text == "gnk") return Family::kCutVertex;
  if (text == "cut-edge" || text == "gbar") return Family::kCutEdge;
  throw InvalidArgumentError("unknown family '" + std::string(text) + "'");
}

bool family_in_range(Family f, int n, int k) {
  if (f == Family::kCutVertex) return n >= 2 && k >= 0 && k <= n - 2;
  return n >= 3 && k >= 0 && k <= n - 3;
}

Graph build_g_nk(int n, int k) {
  if (n > kMaxVertices) throw CapacityError("order exceeds maximum");
  if (!family_in_range(Family::kCutVertex, n, k)) {
    throw RangeError("G(n,k) needs n >= 2 and 0 <= k <= n-2, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  const int clique = n - k;
  GraphBuilder b(n);
  for (int u = 0; u < clique; ++u) {
    for (int v = u + 1; v < clique; ++v) b.connect(u, v);
  }
  const int base = k / clique;
  const int extra = k % clique;
  int next = clique;
  for (int i = 0; i < clique; ++i) {
    const int length = base + (i < extra ? 1 : 0);
    int prev = i;
    for (int j = 0; j < length; ++j) {
      b.connect(prev, next);
      prev = next++;
    }
  }
  return b.build();
}

Graph build_gbar_nk(int n, int k) {
  if (n > kMaxVertices) throw CapacityError("order exceeds maximum");
  if (!family_in_range(Family::kCutEdge, n, k)) {
    throw RangeError("Gbar(n,k) needs n >= 3 and 0 <= k <= n-3, got n=" + std::to_string(n) +
                     " k=" + std::to_string(k));
  }
  const int clique = n - k;
  GraphBuilder b(n);
  for (int u = 0; u < clique; ++u) {
    for (int v = u + 1; v < clique; ++v) b.connect(u, v);
  }
  for (int p = clique; p < n; ++p) b.connect(0, p);
  return b.build();
}

Graph build_extremal(Family f, int n, int k) {
  return f == Family::kCutVertex ? build_g_nk(n, k) : build_gbar_nk(n, k);
}

Rational closed_form_gbar(int n, int k) {
  if (n < 1 || k < 0 || k > n - 1) {
    throw RangeError("closed form needs n >= 1 and 0 <= k <= n-1, got n=" + std::to_string(n) +
                     " k=" + std::to_string(k));
  }
  const Rational N(n);
  const Rational K(k);
  const Rational half(1, 2);
  const Rational c2 = Rational(5, 2) * K + 2;
  const Rational c1 = Rational(2) * K * K + Rational(11, 2) * K + 1;
  const Rational c0 = half * K * K * K + Rational(2) * K * K + Rational(5, 2) * K;
  return N * N * N - c2 * N * N + c1 * N - c0;
}

std::string_view lemma_name(Lemma l) {
  switch (l) {
    case Lemma::kL21:
      return "l21";
    case Lemma::kL31:
      return "l31";
    case Lemma::kC33:
      return "c33";
    case Lemma::kL34:
      return "l34";
    case Lemma::kL41:
      return "l41";
    case Lemma::kL42:
      return "l42";
  }
  return "?";
}

Lemma parse_lemma(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  for (Lemma l : {Lemma::kL21, Lemma::kL31, Lemma::kC33, Lemma::kL34, Lemma::kL41, Lemma::kL42}) {
    if (lemma_name(l) == lower) return l;
  }
  throw InvalidArgumentError("unknown lemma '" + std::string(text) + "'");
}

Lemma lemma_of(const Roles& roles) {
  switch (roles.index()) {
    case 0:
      return Lemma::kL31;
    case 1:
      return Lemma::kC33;
    case 2:
      return Lemma::kL34;
    case 3:
      return Lemma::kL41;
    default:
      return Lemma::kL42;
  }
}

}  // namespace rdd
