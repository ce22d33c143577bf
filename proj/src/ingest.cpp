#include <fstream>

#include "octic/report.hpp"

namespace octic {

namespace {

long int_field(const Json& row, const char* key) {
  if (!row.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing field '") + key + "'");
  const Json& v = row[key];
  if (v.is_number_integer()) return v.get<long>();
  if (v.is_string()) return parse_bigint(v.get<std::string>()).get_si();
  throw Error(ErrorKind::ParseError, std::string("field '") + key + "' must be an integer");
}

QuadInt elem_field(const Json& row, const char* key, const QuadField& f) {
  if (!row.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing field '") + key + "'");
  const Json& v = row[key];
  if (v.is_number_integer()) return f.from_int(v.get<long>());
  if (!v.is_string()) throw Error(ErrorKind::ParseError, std::string("field '") + key + "' must be an element string");
  return QuadInt::parse(f, v.get<std::string>());
}

}  // namespace

IngestResult ingest_candidates(std::istream& in) {
  IngestResult out;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      Json row;
      try {
        row = Json::parse(text);
      } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::ParseError, e.what());
      }
      if (!row.is_object()) throw Error(ErrorKind::ParseError, "row must be a JSON object");
      const long d = int_field(row, "d");
      const long m = int_field(row, "m");
      const FamilySpec spec = FamilySpec::composite(d, m);
      const QuadField& f = spec.field();
      Candidate c{elem_field(row, "X", f), elem_field(row, "Y", f), elem_field(row, "Z", f), ""};
      c.label = row.contains("label") && row["label"].is_string() ? row["label"].get<std::string>()
                                                                  : "row " + std::to_string(line);
      BigInt ri;
      try {
        ri = rel_index(spec.order(), c.element(f.zero()));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotPrimitive) throw;
        throw Error(ErrorKind::RelIndexNotOne, "candidate does not generate K over M");
      }
      if (ri != 1) throw Error(ErrorKind::RelIndexNotOne, "relative index " + to_string(ri));
      out.accepted.push_back(CandidateRecord{d, m, std::move(c), line});
    } catch (const Error& e) {
      out.rejected.push_back(IngestRejection{line, e.kind(), "line " + std::to_string(line) + ": " + e.what()});
    }
  }
  return out;
}

IngestResult ingest_candidates(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  return ingest_candidates(in);
}

}  // namespace octic
