#pragma once

// Group presentations and homomorphism verification: every relator is
// evaluated in the target engine and must come out as the identity. The
// first failing relator is the refutation witness.

#include "certify/coxeter.hpp"
#include "certify/engine.hpp"

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

namespace certify::run {

struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<std::vector<int>> relators;  // signed 1-based generator indices
  std::vector<std::string> relator_labels;
  std::optional<cox::CoxeterMatrix> coxeter_source;

  // Coxeter presentation: relators (s_i s_j)^{m_ij} for every finite label,
  // including s_i^2 from the diagonal.
  static Presentation from_coxeter(const cox::CoxeterMatrix& m,
                                   const std::string& prefix = "s") {
    Presentation p;
    p.coxeter_source = m;
    for (int i = 1; i <= m.rank(); ++i) p.generator_names.push_back(prefix + std::to_string(i));
    for (int i = 0; i < m.rank(); ++i) {
      p.relators.push_back({i + 1, i + 1});
      p.relator_labels.push_back(prefix + std::to_string(i + 1) + "^2");
    }
    for (int i = 0; i < m.rank(); ++i)
      for (int j = i + 1; j < m.rank(); ++j) {
        int label = m.at(i, j);
        if (label == cox::kInfinity) continue;
        std::vector<int> w;
        for (int rep = 0; rep < label; ++rep) {
          w.push_back(i + 1);
          w.push_back(j + 1);
        }
        p.relators.push_back(std::move(w));
        p.relator_labels.push_back("(" + prefix + std::to_string(i + 1) + " " + prefix +
                                   std::to_string(j + 1) + ")^" + std::to_string(label));
      }
    return p;
  }

  std::size_t size() const { return generator_names.size(); }
};

struct HomomorphismCheck {
  bool verified = false;
  std::string failing_relator;  // label of the first relator that is not killed
};

template <class E>
HomomorphismCheck verify_homomorphism(const Presentation& p, const std::vector<E>& images) {
  if (images.size() != p.size())
    throw std::invalid_argument("assignment must cover every generator");
  HomomorphismCheck out;
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    const std::vector<int>& word = p.relators[r];
    E acc = identity_like(images.front());
    for (int letter : word) {
      const E& g = images[static_cast<std::size_t>(std::abs(letter)) - 1];
      acc = mul(acc, letter > 0 ? g : inv(g));
    }
    if (!is_id(acc)) {
      out.verified = false;
      out.failing_relator = p.relator_labels[r];
      return out;
    }
  }
  out.verified = true;
  return out;
}

}  // namespace certify::run
