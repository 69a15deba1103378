#ifndef LATTICEISO_CERTIFICATE_IO_HPP
#define LATTICEISO_CERTIFICATE_IO_HPP

#include <optional>
#include <string>

#include "latticeiso/certify.hpp"

namespace latticeiso::certify {

// JSON with a stable field order and a "format_version" tag.  indent < 0
// emits a single line.
std::string certificate_to_json(const Certificate& certificate, int indent = -1);

// Parses either a bare certificate object or a CLI envelope whose "result"
// holds one.  Throws std::invalid_argument on malformed input.
Certificate certificate_from_json(const std::string& text);

// Non-throwing variant; empty on malformed input.
std::optional<Certificate> try_certificate_from_json(const std::string& text);

}  // namespace latticeiso::certify

#endif  // LATTICEISO_CERTIFICATE_IO_HPP
