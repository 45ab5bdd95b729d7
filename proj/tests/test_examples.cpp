#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "satake/dataset.hpp"
#include "satake/worked_examples.hpp"
#include "support/testutil.hpp"

using namespace satake;
using testutil::thrown_code;
namespace fs = std::filesystem;

namespace {

// Restores SATAKE_DATA_DIR on scope exit so later tests see the shipped data.
struct DataDirOverride {
    explicit DataDirOverride(const std::string& dir) {
        setenv("SATAKE_DATA_DIR", dir.c_str(), 1);
    }
    ~DataDirOverride() { unsetenv("SATAKE_DATA_DIR"); }
};

void report_details_on_failure(const VerificationReport& rep) {
    for (const auto& c : rep.checks)
        if (!c.pass) MESSAGE(c.name << ": " << c.detail);
}

}  // namespace

TEST_CASE("rank-two intersection pipeline") {
    auto transition = sl3_transition_check();
    report_details_on_failure(transition);
    CHECK(transition.all_pass());

    auto mult = sl3_multiplicity();
    report_details_on_failure(mult);
    CHECK(mult.all_pass());
    CHECK(mult.data.at("coefficient") == 1);

    auto invariants = sl3_matrix_invariants();
    report_details_on_failure(invariants);
    CHECK(invariants.all_pass());
    CHECK(invariants.data.at("labels").size() == 9);

    auto full = verify_sl3();
    report_details_on_failure(full);
    CHECK(full.all_pass());
    CHECK(full.data.at("coefficient") == 1);
    CHECK(full.data.at("residue_deg_z_first") == 1);
    CHECK(full.data.at("residue_deg_z_full") == 0);
}

TEST_CASE("rank-four certificate pipeline") {
    auto structures = d4_structures();
    report_details_on_failure(structures);
    CHECK(structures.all_pass());

    auto cert = d4_u_certificate();
    report_details_on_failure(cert);
    CHECK(cert.all_pass());
    CHECK(cert.data.at("kernel_dimension") == 1);
    CHECK(cert.data.at("nonzero_coordinate") == 1);

    auto crystal = d4_crystal_data();
    report_details_on_failure(crystal);
    CHECK(crystal.all_pass());

    auto full = verify_d4();
    report_details_on_failure(full);
    CHECK(full.all_pass());
    CHECK(full.data.at("claimed_coefficient") == 2);
    CHECK(full.data.at("certified_lower_bound") == 2);
    CHECK(full.data.at("exact_value_certified") == false);
}

TEST_CASE("data assets are checksum-guarded") {
    fs::path shipped = data_dir();
    REQUIRE(fs::exists(shipped / "manifest.json"));

    fs::path tmp = fs::temp_directory_path() / "satake_tampered_data";
    fs::remove_all(tmp);
    fs::create_directories(tmp);
    for (const auto& entry : fs::directory_iterator(shipped))
        fs::copy_file(entry.path(), tmp / entry.path().filename());

    DataDirOverride guard(tmp.string());
    CHECK(data_dir() == tmp.string());
    CHECK(!load_data_file("sl3.json").empty());

    {
        std::ofstream out(tmp / "d4.json", std::ios::app);
        out << ' ';
    }
    CHECK(thrown_code([] { load_data_file("d4.json"); }) == errc::checksum_mismatch);

    {
        std::ofstream out(tmp / "unlisted.json");
        out << "{}";
    }
    CHECK(thrown_code([] { load_data_file("unlisted.json"); }) == errc::checksum_mismatch);

    CHECK(thrown_code([] { sha256_file("/nonexistent/file"); }) == errc::bad_input);
}
