#ifndef EXCDOM_IO_HPP
#define EXCDOM_IO_HPP

#include <json.hpp>

#include "excdom/compactify.hpp"
#include "excdom/domains.hpp"

namespace excdom {

using Json = nlohmann::json;

/// Wire formats: a complex scalar is [re, im]; an octonion is an array of 8
/// such pairs; a 27-dimensional element is {"alpha":[c,c,c],"a":[oct,oct,oct]};
/// a 16-dimensional element is {"b":oct,"c":oct}. Parsers reject NaN/Inf.
Json to_json(Complex z);
Json to_json(const Octonion& o);
Json to_json(const AlgebraSignature& sig);
Json to_json(const CompositionElement& x);
Json to_json(const AlbertElement& a);
Json to_json(const WElement& x);
Json to_json(const FreudenthalPoint& p);
Json to_json(const DomainVerdict& v);
Json to_json(const BoundaryReport& r);

Complex complex_from_json(const Json& j);
Octonion octonion_from_json(const Json& j);
AlgebraSignature signature_from_json(const Json& j);
CompositionElement composition_from_json(const Json& j);
AlbertElement albert_from_json(const Json& j);
WElement w_from_json(const Json& j);
FreudenthalPoint freudenthal_from_json(const Json& j);

}  // namespace excdom

#endif
