#include "ordlab/order.hpp"

namespace ordlab {

MaybeSign sign_of(const OrderOracle& o, const Word& w) {
  auto nf = o.group->normal_form(w);
  if (!nf) {
    return std::nullopt;
  }
  if (nf->empty()) {
    throw IdentitySign();
  }
  return o.sign_nf(*nf);
}

MaybeSign less_than(const OrderOracle& o, const Word& g, const Word& h) {
  return sign_of(o, concat(inverse(g), h));
}

std::optional<int> order_cmp(const OrderOracle& o, const Word& g, const Word& h) {
  auto nf = o.group->mult(inverse(g), h);
  if (!nf) {
    return std::nullopt;
  }
  if (nf->empty()) {
    return 0;
  }
  auto s = o.sign_nf(*nf);
  if (!s) {
    return std::nullopt;
  }
  // sign(g^-1 h) = + means g < h
  return *s == Sign::plus ? -1 : 1;
}

}  // namespace ordlab
