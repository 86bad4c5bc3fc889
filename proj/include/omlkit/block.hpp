#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lattice.hpp"

namespace omlkit {

/// A Boolean subalgebra together with its atoms. Maximal blocks play the
/// role of contexts; the center, the possibility space and expanded
/// contexts are carried as blocks too.
class BooleanBlock {
public:
  explicit BooleanBlock(Subalgebra carrier) : carrier_(std::move(carrier)) {
    if (auto w = distributivity_witness(carrier_)) {
      const auto& L = carrier_.parent();
      throw std::invalid_argument("subalgebra is not Boolean: distributivity fails at (" +
                                  L.label((*w)[0]) + ", " + L.label((*w)[1]) + ", " +
                                  L.label((*w)[2]) + ")");
    }
    atoms_ = carrier_.atoms();
  }

  const Subalgebra& carrier() const { return carrier_; }
  const OrthoLattice& lattice() const { return carrier_.parent(); }
  const std::vector<ElementId>& members() const { return carrier_.members(); }
  const std::vector<ElementId>& atoms() const { return atoms_; }
  std::size_t size() const { return carrier_.size(); }
  bool contains(ElementId x) const { return carrier_.contains(x); }

  bool operator==(const BooleanBlock& o) const { return carrier_ == o.carrier_; }

private:
  Subalgebra carrier_;
  std::vector<ElementId> atoms_;
};

}  // namespace omlkit
