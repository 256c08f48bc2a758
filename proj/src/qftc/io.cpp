#include "qftc/io.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qftc {

namespace {

ojson load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return ojson::parse(in);  // throws nlohmann parse_error on bad input
}

cvec read_complex_fields(const ojson& doc, const char* re_key,
                         const char* im_key, const std::string& path) {
  if (!doc.contains("n") || !doc.contains(re_key)) {
    throw std::invalid_argument(path + ": missing required field (\"n\", \"" +
                                re_key + "\")");
  }
  const std::size_t n = doc.at("n").get<std::size_t>();
  if (!is_pow2(n) || n < 2) {
    throw std::domain_error(path + ": n must be a power of two with n >= 2");
  }
  const auto re = doc.at(re_key).get<std::vector<double>>();
  std::vector<double> im(n, 0.0);
  if (doc.contains(im_key)) im = doc.at(im_key).get<std::vector<double>>();
  if (re.size() != n || im.size() != n) {
    throw std::invalid_argument(path + ": component arrays must have length n");
  }
  cvec v(n);
  double n2 = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    v[j] = cplx(re[j], im[j]);
    n2 += std::norm(v[j]);
  }
  if (std::abs(std::sqrt(n2) - 1.0) > 1e-8) {
    throw std::domain_error(
        path + ": non-unit vector (norm deviates by more than 1e-8)");
  }
  return v;
}

}  // namespace

cvec load_input_vector(const std::string& path) {
  return read_complex_fields(load_json(path), "real", "imag", path);
}

CirculantSpec load_circulant_spec(const std::string& path) {
  return CirculantSpec{
      read_complex_fields(load_json(path), "c_real", "c_imag", path)};
}

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_qftc_csv(const std::string& path, const QftcResult& result) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << "k,y_exact,y_hat,abs_error,prob_mass\n";
  for (const auto& row : result.per_k) {
    out << row.k << ',' << format_double(row.y_exact) << ','
        << format_double(row.y_hat) << ','
        << format_double(std::abs(row.y_hat - row.y_exact)) << ','
        << format_double(row.prob_mass) << '\n';
  }
}

void write_amplitudes_csv(const std::string& path, const StateVector& state) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << "k,amplitude_real,amplitude_imag\n";
  for (std::size_t k = 0; k < state.dim(); ++k) {
    const cplx a = state.amplitudes()[k];
    out << k << ',' << format_double(a.real()) << ','
        << format_double(a.imag()) << '\n';
  }
}

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot hash " + path);
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (ctx == nullptr || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1) {
    EVP_MD_CTX_free(ctx);
    fail("sha256 init failed");
  }
  char buf[1 << 16];
  while (in) {
    in.read(buf, sizeof(buf));
    const std::streamsize got = in.gcount();
    if (got > 0) EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(got));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, digest, &len);
  EVP_MD_CTX_free(ctx);
  std::string hex(2 * len, '0');
  static const char* kHex = "0123456789abcdef";
  for (unsigned int i = 0; i < len; ++i) {
    hex[2 * i] = kHex[digest[i] >> 4];
    hex[2 * i + 1] = kHex[digest[i] & 0xf];
  }
  return hex;
}

ojson tally_json(const GateTally& t) {
  return ojson{{"one_two_qubit_count", t.one_two_qubit_count},
               {"oracle_calls", t.oracle_calls},
               {"inverse_oracle_calls", t.inverse_oracle_calls}};
}

void write_manifest(const std::string& path, const std::string& command,
                    ojson fields,
                    const std::vector<std::string>& output_files) {
  ojson doc;
  doc["command"] = command;
  for (auto& [k, v] : fields.items()) doc[k] = v;
  ojson outs = ojson::array();
  for (const auto& f : output_files) {
    outs.push_back(ojson{{"path", f}, {"sha256", sha256_file(f)}});
  }
  doc["outputs"] = outs;
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << doc.dump(2) << '\n';
}

}  // namespace qftc
