#pragma once

#include <filesystem>
#include <fstream>
#include <string>

namespace testutil {

inline std::filesystem::path repo_root() {
    return std::filesystem::path(PEERLENS_REPO_ROOT);
}

inline std::filesystem::path fixture(const std::string& name) {
    return repo_root() / "fixtures" / name;
}

inline std::filesystem::path data_file(const std::string& name) {
    return repo_root() / "data" / name;
}

// Fresh scratch directory under the system temp root.
inline std::filesystem::path scratch_dir(const std::string& tag) {
    auto dir = std::filesystem::temp_directory_path() /
               ("peerlens_test_" + tag);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

inline std::filesystem::path write_file(const std::filesystem::path& dir,
                                        const std::string& name,
                                        const std::string& content) {
    auto path = dir / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
}

}  // namespace testutil
