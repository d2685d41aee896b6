#pragma once
#include <string>

#include "knotdiff/chain.hpp"
#include "knotdiff/invariants.hpp"
#include "knotdiff/laurent.hpp"
#include "knotdiff/matrix.hpp"
#include "knotdiff/system.hpp"

namespace knotdiff {

// whole-file reads/writes; throws io with the path in the message
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// All emitters produce a stable, byte-reproducible rendering: 2-space indent,
// keys in fixed order, terms in basis order, trailing newline.

// {"var":"q","terms":[[exp,num,den],...]} ascending exponents
std::string poly_to_json(const Laurent& p);

// {"terms":[{"coeff":c,"basis":label},...]}
std::string sum_to_json(const FormalSum<ClassLabel>& s);

// {"terms":[{"coeff":c,"word":w,"class":label},...]}
std::string weighted_to_json(const FormalSum<WordClass>& s);

// {"degree":r,"terms":[{"coeff":c,"word":w,"class":label},...]}
std::string chain_to_json(const ChainElement& c);
ChainElement chain_from_json(const std::string& text);

// {"pd":"X[...], ..."}
std::string resolve_to_json(const Diagram& d);

// {"r":...,"order":...,"value":{"num":...,"den":...},"status":"pass"}
std::string vanishing_to_json(const VanishingReport& rep);

// rank report: dimensions up front, then ranks and torsion factors; marked
// as a sampled subquotient since the generating sets are finite samples
std::string quotient_to_json(const QuotientResult& q, int generators,
                             int higher_generators);

// {"jones":...,"conway":...,"v2":...,"series":[{"order":n,"num":...,...}]}
std::string invariant_to_json(const Diagram& d, int series_order);

}  // namespace knotdiff
