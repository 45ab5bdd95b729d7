#ifndef SATAKE_DATASET_HPP
#define SATAKE_DATASET_HPP

#include <string>

#include "satake/json_io.hpp"

namespace satake {

// Directory holding the shipped data assets: $SATAKE_DATA_DIR if set,
// otherwise the build-time default.
std::string data_dir();

// Hex-encoded SHA-256 of a file's bytes.  Throws bad_input if the file
// cannot be read.
std::string sha256_file(const std::string& path);

// Loads <data_dir>/<name>, first checking its SHA-256 against the entry in
// <data_dir>/manifest.json (errc::checksum_mismatch on disagreement, and
// also when the manifest has no entry for the file).
Json load_data_file(const std::string& name);

}  // namespace satake

#endif
