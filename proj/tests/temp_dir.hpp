#pragma once

#include <atomic>
#include <filesystem>
#include <random>
#include <string>

// A fresh directory under the system temp path, removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    _path = std::filesystem::temp_directory_path()
            / ("morita-test-" + std::to_string(rd()) + "-" + std::to_string(counter()++));
    std::filesystem::create_directories(_path);
  }

  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(_path, ec);
  }

  TempDir(TempDir const&)            = delete;
  TempDir& operator=(TempDir const&) = delete;

  std::filesystem::path const& path() const {
    return _path;
  }

  std::filesystem::path operator/(std::string const& name) const {
    return _path / name;
  }

 private:
  static std::atomic<int>& counter() {
    static std::atomic<int> n{0};
    return n;
  }

  std::filesystem::path _path;
};
