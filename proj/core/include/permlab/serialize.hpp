#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "permlab/embedding.hpp"
#include "permlab/order.hpp"
#include "permlab/universe.hpp"

namespace permlab {

using Json = nlohmann::json;

/// Canonical document text: two-space indent, keys sorted, trailing LF.
std::string to_document(const Json& j);

/// Parses JSON text; syntax errors become ParseError("line L, column C: ...").
Json parse_document(std::string_view text);

Json to_json(const OrderSpec& spec);
/// Schema errors are ParseError.
OrderSpec order_spec_from_json(const Json& j);
OrderSpec parse_order_spec(std::string_view text);

/// Atom addresses: base atoms `p@0[k]`, successors `q@n[<parent path>]#k`.
std::string atom_path(const Universe& u, AtomId a);
/// Errors: ParseError (syntax), UnknownAtom (well-formed but absent).
AtomId parse_atom_path(const Universe& u, std::string_view text);

Json cycles_to_json(const Universe& u, const Cycles& cycles);
Cycles cycles_from_json(const Universe& u, const Json& j);

Json to_json(const Universe& u, const WitnessMap& w);
WitnessMap witness_from_json(const Universe& u, const Json& j);

Json to_json(const Universe& u, const RefutationCertificate& cert);
RefutationCertificate certificate_from_json(const Universe& u, const Json& j);

Json to_json(const EmbeddingReport& report);
/// Rebuilds the universe from the recorded order and truncation.
EmbeddingReport report_from_json(const Json& j, std::size_t size_cap = kDefaultSizeCap);

/// Atom table of a universe, in id order.
Json to_json(const Universe& u);

}  // namespace permlab
