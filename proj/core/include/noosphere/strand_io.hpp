#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "noosphere/ncomp.hpp"

namespace noosphere {

// One 115-base strand per line (19 address bases, then 96 payload bases),
// '#' starts a comment line. Strands are loaded with unlocked access, so a
// file may populate the replication segment. Throws ParseError with the
// offending line number.
DnaMemory parse_strands(std::string_view text,
                        AddressRange replication_segment = kDefaultReplicationSegment);
DnaMemory read_strand_file(const std::filesystem::path& path,
                           AddressRange replication_segment = kDefaultReplicationSegment);

std::string format_strands(const DnaMemory& memory);

}  // namespace noosphere
