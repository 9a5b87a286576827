#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "permorb/base_fusion.hpp"
#include "permorb/int_matrix.hpp"
#include "permorb/orbifold.hpp"
#include "permorb/qsqrt.hpp"

namespace permorb {

using Json = nlohmann::ordered_json;

/// Reads {"gram": [[...], ...]}; entries are JSON integers or integer strings.
/// Throws ParseError.
IntMatrix parse_gram_json(std::string_view text);
IntMatrix read_gram_file(const std::filesystem::path& path);

/// Parses D(coords;eps), N(coords,coords) or T(coords;eps) where coords is a
/// comma-separated list of d rationals. A NonDiag label may also separate its
/// two vectors with ';'. Throws ParseError, NotInDual or DegeneratePair.
OrbifoldLabel parse_label(const Orbifold& orbifold, std::string_view text);

Json to_json(const DualVector& v);
Json to_json(const QSqrt& x);
Json to_json(const Orbifold& orbifold, const OrbifoldLabel& m);
Json to_json(const Orbifold& orbifold, const FusionMultiset& m);
Json to_json(const BaseFusion& base, VlLabel a);
Json to_json(const BaseFusion& base, const VlPlusLabel& a);

}  // namespace permorb
