#include "hopfgr/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hopfgr {

namespace {

FieldSpec parse_field(const Json& v) {
  if (!v.is_string()) throw InputError("field must be a string such as \"Q\" or \"F2\"");
  const auto s = v.get<std::string>();
  if (s == "Q") return FieldSpec::rationals();
  if (s.size() > 1 && s[0] == 'F' && s.find_first_not_of("0123456789", 1) == std::string::npos && s.size() < 12) {
    try {
      return FieldSpec::prime(static_cast<std::uint32_t>(std::stoul(s.substr(1))));
    } catch (const std::exception& e) {
      throw InputError("field " + s + ": " + e.what());
    }
  }
  throw InputError("unknown field: " + s);
}

template <class S>
class Reader {
 public:
  Reader(const Field<S>& f, Index n) : f_(f), n_(n) {}

  S scalar(const Json& v, const std::string& where) const {
    try {
      if (v.is_string()) return f_.parse(v.get<std::string>());
      if (v.is_number_integer()) return f_.from_int(v.get<long>());
    } catch (const std::invalid_argument& e) {
      throw InputError(where + ": " + e.what());
    }
    throw InputError(where + ": scalars must be strings or integers");
  }

  const Json& list(const Json& v, std::size_t len, const std::string& where) const {
    if (!v.is_array()) throw InputError(where + " must be a list");
    if (v.size() != len)
      throw InputError(where + " has length " + std::to_string(v.size()) + ", expected " + std::to_string(len));
    return v;
  }

  /// A list of rows of the given width; rows = -1 accepts any count.
  Mat<S> rows(const Json& v, Index count, Index width, const std::string& where) const {
    if (!v.is_array()) throw InputError(where + " must be a list of rows");
    if (count >= 0) list(v, static_cast<std::size_t>(count), where);
    Mat<S> m = zeros<S>(static_cast<Index>(v.size()), width);
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::string at = where + "[" + std::to_string(i) + "]";
      const auto& row = list(v[i], static_cast<std::size_t>(width), at);
      for (Index j = 0; j < width; ++j) m(static_cast<Index>(i), j) = scalar(row[j], at);
    }
    return m;
  }

  Index n() const { return n_; }

 private:
  const Field<S>& f_;
  Index n_;
};

template <class S>
ZooEntry<S> load_as(const Json& doc, const Field<S>& f, Index n) {
  const Reader<S> rd(f, n);
  Mat<S> mult = zeros<S>(n, n * n);
  const auto& mt = rd.list(doc.at("mult"), n, "mult");
  for (Index i = 0; i < n; ++i) {
    const Mat<S> table = rd.rows(mt[i], n, n, "mult[" + std::to_string(i) + "]");
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) mult(k, i * n + j) = table(j, k);
  }
  const Mat<S> unit = rd.rows(Json::array({doc.at("unit")}), 1, n, "unit").transpose();
  Mat<S> comult = zeros<S>(n * n, n);
  const auto& ct = rd.list(doc.at("comult"), n, "comult");
  for (Index k = 0; k < n; ++k) {
    const Mat<S> table = rd.rows(ct[k], n, n, "comult[" + std::to_string(k) + "]");
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) comult(i * n + j, k) = table(i, j);
  }
  const Mat<S> counit = rd.rows(Json::array({doc.at("counit")}), 1, n, "counit");
  std::optional<Mat<S>> braiding;
  if (doc.contains("braiding")) braiding = rd.rows(doc.at("braiding"), n * n, n * n, "braiding");

  ZooEntry<S> z{doc.value("name", std::string("input")),
                Bialgebra<S>(f, mult, unit, comult, counit, std::move(braiding)),
                {},
                {},
                {}};
  if (doc.contains("basis")) {
    for (const auto& label : rd.list(doc.at("basis"), n, "basis")) {
      if (!label.is_string()) throw InputError("basis labels must be strings");
      z.basis.push_back(label.template get<std::string>());
    }
  } else {
    for (Index i = 0; i < n; ++i) z.basis.push_back("e" + std::to_string(i));
  }

  auto expected = [](const Json& v) -> std::optional<bool> {
    if (!v.is_object() || !v.contains("expected")) return std::nullopt;
    if (!v.at("expected").is_boolean()) throw InputError("expected must be a boolean");
    return v.at("expected").get<bool>();
  };
  if (doc.contains("subspaces")) {
    if (!doc.at("subspaces").is_object()) throw InputError("subspaces must be an object");
    for (const auto& [name, v] : doc.at("subspaces").items()) {
      const Json& vecs = v.is_object() ? v.at("span") : v;
      const Mat<S> m = rd.rows(vecs, -1, n, "subspaces." + name);
      z.subspaces.push_back({name, Subspace<S>::span(Mat<S>(m.transpose())), expected(v)});
    }
  }
  if (doc.contains("quotients")) {
    if (!doc.at("quotients").is_object()) throw InputError("quotients must be an object");
    for (const auto& [name, v] : doc.at("quotients").items()) {
      const Json& rows = v.is_object() ? v.at("matrix") : v;
      z.quotients.push_back({name, rd.rows(rows, -1, n, "quotients." + name), expected(v)});
    }
  }
  return z;
}

}  // namespace

AnyZooEntry load_document(const Json& doc) {
  try {
    if (!doc.is_object()) throw InputError("document must be an object");
    const auto spec = parse_field(doc.at("field"));
    const auto& d = doc.at("dim");
    if (!d.is_number_integer() || d.get<long>() < 1 || d.get<long>() > 64)
      throw InputError("dim must be an integer between 1 and 64");
    const Index n = d.get<Index>();
    if (spec.kind == FieldSpec::Kind::rationals) return load_as(doc, Field<Rational>(spec), n);
    return load_as(doc, Field<ModP>(spec), n);
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed document: ") + e.what());
  } catch (const DimensionMismatch& e) {
    throw InputError(e.what());
  }
}

AnyZooEntry load_document_text(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    throw InputError(std::string("not valid JSON: ") + e.what());
  }
  return load_document(doc);
}

AnyZooEntry load_document_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return load_document_text(text.str());
}

template <class S>
Json matrix_to_json(const Field<S>& f, const Mat<S>& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(f.format(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class S>
Json basis_to_json(const Field<S>& f, const Mat<S>& basis) {
  return matrix_to_json(f, Mat<S>(basis.transpose()));
}

template <class S>
Json export_document(const ZooEntry<S>& z) {
  const auto& e = z.bialgebra;
  const auto& f = e.field();
  const Index n = e.dim();
  Json doc;
  doc["name"] = z.name;
  doc["field"] = f.spec().name();
  doc["dim"] = n;
  doc["basis"] = z.basis;
  Json mult = Json::array();
  for (Index i = 0; i < n; ++i) {
    Mat<S> table(n, n);
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) table(j, k) = e.mult()(k, i * n + j);
    mult.push_back(matrix_to_json(f, table));
  }
  doc["mult"] = std::move(mult);
  doc["unit"] = matrix_to_json(f, Mat<S>(e.unit().transpose()))[0];
  Json comult = Json::array();
  for (Index k = 0; k < n; ++k) {
    Mat<S> table(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) table(i, j) = e.comult()(i * n + j, k);
    comult.push_back(matrix_to_json(f, table));
  }
  doc["comult"] = std::move(comult);
  doc["counit"] = matrix_to_json(f, e.counit())[0];
  if (!e.flip_braided()) doc["braiding"] = matrix_to_json(f, e.braiding());
  Json subs = Json::object();
  for (const auto& s : z.subspaces) {
    Json v{{"span", basis_to_json(f, s.space.basis())}};
    if (s.expected) v["expected"] = *s.expected;
    subs[s.name] = std::move(v);
  }
  doc["subspaces"] = std::move(subs);
  Json quots = Json::object();
  for (const auto& q : z.quotients) {
    Json v{{"matrix", matrix_to_json(f, q.map)}};
    if (q.expected) v["expected"] = *q.expected;
    quots[q.name] = std::move(v);
  }
  doc["quotients"] = std::move(quots);
  return doc;
}

Json export_document(const AnyZooEntry& z) {
  return std::visit([](const auto& entry) { return export_document(entry); }, z);
}

std::string canonical_text(const Json& doc) { return doc.dump(); }

std::string fnv1a_digest(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (const unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

#define HOPFGR_IO(S)                                                  \
  template Json export_document(const ZooEntry<S>&);                  \
  template Json matrix_to_json(const Field<S>&, const Mat<S>&);       \
  template Json basis_to_json(const Field<S>&, const Mat<S>&);

HOPFGR_IO(Rational)
HOPFGR_IO(ModP)

}  // namespace hopfgr
