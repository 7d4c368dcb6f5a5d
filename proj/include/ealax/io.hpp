#ifndef EALAX_IO_HPP
#define EALAX_IO_HPP

#include "ealax/conformal.hpp"
#include "ealax/qtorus.hpp"
#include "ealax/toroidal.hpp"
#include "ealax/verify.hpp"

#include <json.hpp>

namespace ealax {

/// Which key grammar ambiguous tokens (k0, d1, E{..}) resolve into.
enum class Domain { Finite, Affine, Toroidal, Qt, SlInf, CovInf, CovAff, CHat, CTilde, CgElem };

struct KeyContext {
  const FiniteLie* g = nullptr;
  Domain domain = Domain::Toroidal;
  int n = 2;  // matrix/block size for the quantum-torus grammars
};

std::string key_str(const Key& k, const KeyContext& ctx);
std::string elem_str(const SparseVec& v, const KeyContext& ctx);
Key parse_key(const std::string& text, const KeyContext& ctx);

nlohmann::ordered_json report_json(const VerificationReport& r);
nlohmann::ordered_json export_constants(const Algebra& alg, long window, const KeyContext& ctx);
nlohmann::ordered_json export_roots(const DiagramAut& mu, int weyl_len, long bound);
nlohmann::ordered_json export_iproducts(const ConformalCg& cg, long window,
                                        const KeyContext& ctx);
nlohmann::ordered_json export_correspondence(int N, long window);

}  // namespace ealax

#endif
