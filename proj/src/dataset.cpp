#include "satake/dataset.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "satake/config.hpp"
#include "satake/error.hpp"

namespace satake {

std::string data_dir() {
    if (const char* env = std::getenv("SATAKE_DATA_DIR"); env && *env) return env;
    return SATAKE_DATA_DIR_DEFAULT;
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(errc::bad_input, "cannot read file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (!ctx || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx, bytes.data(), bytes.size()) != 1 ||
        EVP_DigestFinal_ex(ctx, digest, &len) != 1) {
        EVP_MD_CTX_free(ctx);
        throw Error(errc::internal, "SHA-256 computation failed");
    }
    EVP_MD_CTX_free(ctx);
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 15]);
    }
    return out;
}

}  // namespace

std::string sha256_file(const std::string& path) { return sha256_hex(read_file(path)); }

Json load_data_file(const std::string& name) {
    const std::string dir = data_dir();
    const std::string path = dir + "/" + name;
    const std::string bytes = read_file(path);

    Json manifest;
    try {
        manifest = Json::parse(read_file(dir + "/manifest.json"));
    } catch (const Json::parse_error& e) {
        throw Error(errc::parse_error, std::string("manifest.json: ") + e.what());
    }
    if (!manifest.contains("files") || !manifest["files"].contains(name))
        throw Error(errc::checksum_mismatch, "manifest.json has no entry for " + name);
    const std::string expected = manifest["files"][name].get<std::string>();
    const std::string actual = sha256_hex(bytes);
    if (expected != actual)
        throw Error(errc::checksum_mismatch,
                    name + ": expected sha256 " + expected + ", file has " + actual);

    try {
        return Json::parse(bytes);
    } catch (const Json::parse_error& e) {
        throw Error(errc::parse_error, name + ": " + e.what());
    }
}

}  // namespace satake
