#pragma once

// Runs the command-line front end in process and keeps scratch input files.

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace harness {

struct Result {
  int code = 0;
  std::string out, err;

  bool operator==(const Result&) const = default;
};

inline Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Result r;
  r.code = dcalc::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class Scratch {
 public:
  Scratch() : dir_(std::filesystem::temp_directory_path() / ("dcalc-" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(dir_);
  }
  ~Scratch() {
    std::error_code ec;
    std::filesystem::remove_all(dir_, ec);
  }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;

  std::string write(const std::string& name, const std::string& text) const {
    const auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  std::filesystem::path dir_;
};

// Problem-4 form on W_6: hub edges 1, rim edge i -> i+1 carries i (6 -> 1 carries 6).
inline const char* wheel_form_csv =
    "degree,simplex,value\n"
    "1,0-1,1\n1,0-2,1\n1,0-3,1\n1,0-4,1\n1,0-5,1\n1,0-6,1\n"
    "1,1-2,1\n1,2-3,2\n1,3-4,3\n1,4-5,4\n1,5-6,5\n1,6-1,6\n";

inline const char* cubic_samples_csv = "x,f\n0,2\n1,10\n2,30\n3,68\n4,130\n5,222\n6,350\n7,520\n8,738\n9,1010\n10,1342\n";

}  // namespace harness
