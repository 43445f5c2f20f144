#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "wallkit/integer.hpp"
#include "wallkit/lattice.hpp"
#include "wallkit/walls.hpp"

namespace wallkit::cli {

using nlohmann::json;

// Integers are emitted as JSON numbers when they fit in int64, as decimal
// strings otherwise; both forms are accepted on input.
json to_json(Integer const& n);
json to_json(IntVector const& v);
json to_json(IntMatrix const& m);
json to_json(LatticeVector const& v);  // {"lattice": ..., "coords": [...]}
json to_json(WallReport const& report);

Integer integer_from_json(json const& j);
IntVector vector_from_json(json const& j);

// Comma-separated integers, e.g. "0,0,1,-2".
IntVector parse_coords(std::string_view text);

// {"ambient": "<name>", "basis": [[...], ...]}
PicardEmbedding picard_from_json(json const& j);
PicardEmbedding read_picard_file(std::string const& path);

}  // namespace wallkit::cli
