// Copyright 2026 The ECHO Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "echo/core/fs.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <fstream>
#include <sstream>
#include <system_error>

#include "echo/core/error.hpp"

namespace echo {

namespace fs = std::filesystem;

void atomic_write_file(const fs::path& path, const void* data, size_t size) {
  if (path.has_parent_path()) {
    fs::create_directories(path.parent_path());
  }
  // Unique temp name per writer so concurrent writers of the same target
  // cannot trample each other's temp file.
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw_error(ErrorCode::IoError, "cannot open for write: " + tmp.string());
    }
    out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
    if (!out) {
      throw_error(ErrorCode::IoError, "short write: " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw_error(ErrorCode::IoError,
                "rename " + tmp.string() + " -> " + path.string() + ": " + ec.message());
  }
}

void atomic_write_file(const fs::path& path, const std::string& contents) {
  atomic_write_file(path, contents.data(), contents.size());
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw_error(ErrorCode::IoError, "cannot open for read: " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FileLock::FileLock(const fs::path& path) {
  if (path.has_parent_path()) {
    fs::create_directories(path.parent_path());
  }
  fd_ = ::open(path.c_str(), O_CREAT | O_RDWR, 0644);
  if (fd_ < 0) {
    throw_error(ErrorCode::IoError, "cannot open lock file: " + path.string());
  }
  if (::flock(fd_, LOCK_EX) != 0) {
    ::close(fd_);
    fd_ = -1;
    throw_error(ErrorCode::IoError, "flock failed: " + path.string());
  }
}

FileLock::~FileLock() {
  if (fd_ >= 0) {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
}

}  // namespace echo
