#pragma once

#include <cstdint>
#include <string>

#include "faceq/complex.hpp"

namespace faceq {

// Scheme file format (JSON object):
//   vertices : array of label strings
//   edges    : array of [tail, head] vertex ids
//   faces    : array of boundary walks; each side is a signed 1-based edge id
//   pairing  : array of {a, b, offset, reversed}
//   meta     : optional free-form provenance object
// Serialization is canonical: parse(serialize(s)) reproduces s exactly and
// serialize is byte-stable for equal schemes.
std::string serialize_scheme(const FacePairingScheme& s);
FacePairingScheme parse_scheme(const std::string& text);

FacePairingScheme load_scheme_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

// FNV-1a over the canonical serialization of the structural fields (meta is
// ignored), so renaming provenance never changes the hash.
std::uint64_t scheme_hash(const FacePairingScheme& s);
std::string hash_hex(std::uint64_t h);

std::uint64_t fnv1a(const std::string& bytes);

}  // namespace faceq
