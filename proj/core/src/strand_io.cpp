#include "noosphere/strand_io.hpp"

#include <fstream>
#include <sstream>

namespace noosphere {

DnaMemory parse_strands(std::string_view text, AddressRange replication_segment) {
  DnaMemory memory(replication_segment);
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() == '#') continue;

    if (line.size() != kStrandBases) {
      throw ParseError(lineno, "strand has " + std::to_string(line.size()) +
                                   " bases, expected " + std::to_string(kStrandBases));
    }
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (!base_from_char(line[i])) {
        throw ParseError(lineno, "invalid base '" + std::string(1, line[i]) + "' at column " +
                                     std::to_string(i + 1));
      }
    }
    const DnaStrand strand = DnaStrand::parse(line);
    const Address address = decode_address(strand);
    if (memory.contains(address)) {
      throw ParseError(lineno, "duplicate address " + std::to_string(address));
    }
    memory.write_strand(strand, Access::kUnlocked);
  }
  return memory;
}

DnaMemory read_strand_file(const std::filesystem::path& path, AddressRange replication_segment) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open strand file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_strands(buf.str(), replication_segment);
}

std::string format_strands(const DnaMemory& memory) {
  std::string out;
  for (Address a : memory.addresses()) {
    out += memory.strand(a).str();
    out += '\n';
  }
  return out;
}

}  // namespace noosphere
