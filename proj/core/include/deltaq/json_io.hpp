#ifndef DELTAQ_JSON_IO_HPP
#define DELTAQ_JSON_IO_HPP

#include <string>

#include "deltaq/hypergeo.hpp"
#include "deltaq/osp.hpp"
#include "deltaq/partition.hpp"
#include "deltaq/qlaurent.hpp"
#include "deltaq/symfunc.hpp"

namespace deltaq {

// Byte-deterministic JSON encodings.  Compact form has no whitespace; the
// pretty form is indented by two spaces.  Terms are always emitted in the
// canonical orders maintained by the underlying containers.
std::string to_json(const QLaurent& f, bool pretty = false);
std::string to_json(const Partition& p, bool pretty = false);
std::string to_json(const SymFunc& f, bool pretty = false);
std::string to_json(const BiSymFunc& f, bool pretty = false);
std::string to_json(const OrderedSetPartition& sigma, bool pretty = false);
std::string to_json(const QRatFunc& f, bool pretty = false);

// Parsers for the encodings the persistent cache needs; ParseError on any
// malformed document.
QLaurent qlaurent_from_json(const std::string& text);
Partition partition_from_json(const std::string& text);

} // namespace deltaq

#endif
