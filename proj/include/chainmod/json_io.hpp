#ifndef CHAINMOD_JSON_IO_HPP
#define CHAINMOD_JSON_IO_HPP

#include "chainmod/chain.hpp"
#include "chainmod/grid.hpp"
#include "chainmod/repair.hpp"

#include <json.hpp>

#include <map>
#include <string>

// Strict document I/O: every document carries "version": 1, unknown fields
// are rejected, vertex coordinates are integers or "p/q" strings (floats
// rejected). Serialization is canonical so identical inputs produce
// byte-identical files.

namespace chainmod {

inline constexpr int kSchemaVersion = 1;

struct ChainDocument {
    ComplexPtr complex;
    std::map<std::string, IntegerChain> chains;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Syntax errors surface as ParseError with 1-based line/column.
ChainDocument parse_chain_document(const std::string& text);
ChainDocument load_chain_document(const std::string& path);
std::string serialize_chain_document(const ChainDocument& doc);

GridChain parse_grid_document(const std::string& text);
GridChain load_grid_document(const std::string& path);
std::string serialize_grid_document(const GridChain& grid);

// Repair certificates travel without their input/output chains; those come
// from the chain documents being verified.
struct CertificateDocument {
    Coeff p = 0;
    IntegerChain quotient;
    std::vector<TraceStep> trace;
};

CertificateDocument parse_certificate_document(const std::string& text,
                                               const ComplexPtr& complex);
CertificateDocument load_certificate_document(const std::string& path,
                                              const ComplexPtr& complex);
std::string serialize_certificate_document(const RepairCertificate& cert,
                                           Coeff p);

// Picks the named chain, or the only chain when name is empty.
const IntegerChain& select_chain(const ChainDocument& doc,
                                 const std::string& name);

// Chain coefficients as a JSON object {"degree": d, "coeffs": {...}}.
nlohmann::ordered_json chain_to_json(const IntegerChain& chain);

} // namespace chainmod

#endif
