#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qftc/circulant.hpp"
#include "qftc/qftc_algorithm.hpp"
#include "qftc/state_vector.hpp"

namespace qftc {

// Insertion-ordered JSON so manifests serialize with stable key order.
using ojson = nlohmann::ordered_json;

// InputVector JSON: {"n": N, "real": [...], "imag": [...]}. "imag" may be
// omitted (all-real vector). Rejects non-power-of-two N and non-unit norm
// (tolerance 1e-8). Parse failures propagate as nlohmann::json exceptions and
// missing files/fields as runtime_error (usage errors); the two value-domain
// rejections (non-power-of-two n, non-unit norm) throw std::domain_error so
// callers can map them to the domain-rejection exit code.
cvec load_input_vector(const std::string& path);

// CirculantSpec JSON: {"n": N, "c_real": [...], "c_imag": [...]}. Same
// validation rules as load_input_vector.
CirculantSpec load_circulant_spec(const std::string& path);

// Deterministic shortest round-trip decimal rendering of a double
// (std::to_chars), so identical runs give byte-identical CSVs.
std::string format_double(double v);

// CSV columns: k,y_exact,y_hat,abs_error,prob_mass.
void write_qftc_csv(const std::string& path, const QftcResult& result);

// CSV columns: k,amplitude_real,amplitude_imag.
void write_amplitudes_csv(const std::string& path, const StateVector& state);

// Hex-encoded SHA-256 digest of a file's bytes (OpenSSL EVP).
std::string sha256_file(const std::string& path);

ojson tally_json(const GateTally& t);

// Run manifest: {"command", ...fields..., "outputs": [{"path","sha256"}]}.
// Every listed output file is hashed at write time.
void write_manifest(const std::string& path, const std::string& command,
                    ojson fields, const std::vector<std::string>& output_files);

}  // namespace qftc
