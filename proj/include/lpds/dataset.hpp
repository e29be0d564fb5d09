#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpds/name_grammar.hpp"

namespace lpds {

// One data file found inside a task directory.
struct FileRecord {
  std::string relative_path;  // POSIX separators, relative to the project root
  std::string filename;
  ParseResult name;
  std::uint64_t size_bytes = 0;
  std::string participant_label;
  std::optional<std::string> session_label;
  std::string task_dir;
};

struct TaskDir {
  std::string name;
  std::vector<FileRecord> files;
  std::vector<std::string> subdirs;  // unexpected; task dirs hold only files
};

struct SessionDir {
  std::string label;           // from ses-<label>
  bool label_valid = true;     // false when <label> violates the value charset
  std::vector<TaskDir> task_dirs;
  std::vector<std::string> stray_files;  // files directly inside the session dir
};

struct ParticipantDir {
  std::string label;        // from part-<label>
  std::string dir_name;     // folder name as found on disk
  std::vector<SessionDir> sessions;
  std::vector<TaskDir> task_dirs;  // populated for non-longitudinal participants
  bool metadata_present = false;   // participant_metadata.json
  std::vector<std::string> stray_files;

  bool longitudinal() const { return !sessions.empty(); }
};

// The scanned project tree. Scanning is a pure function of directory
// contents: entries are visited in lexicographic order, hidden files are
// ignored, symbolic links are recorded and skipped, and the derivatives
// subtree is noted but not scanned as raw data.
struct ProjectTree {
  std::string root;
  bool has_participants_dir = false;
  std::vector<ParticipantDir> participants;
  std::vector<std::string> invalid_participant_dirs;  // dirs under participants/ not part-<label>
  std::vector<std::string> participants_stray_files;  // files directly under participants/
  bool has_dataset_description = false;
  bool has_participants_tsv = false;
  bool has_readme = false;
  bool has_changes = false;
  bool has_derivatives = false;
  std::vector<std::string> symlinks_skipped;

  int session_count() const;
  int file_count() const;
};

enum class ScanErrorKind { RootNotFound, NotADirectory, IoFailure };

class ScanError : public std::runtime_error {
 public:
  ScanError(ScanErrorKind kind, std::string path, const std::string& what)
      : std::runtime_error(what), kind_(kind), path_(std::move(path)) {}
  ScanErrorKind kind() const { return kind_; }
  const std::string& path() const { return path_; }

 private:
  ScanErrorKind kind_;
  std::string path_;
};

ProjectTree scan_tree(const std::filesystem::path& root);

enum class ScaffoldErrorKind { RootNotEmpty, InvalidCount };

class ScaffoldError : public std::runtime_error {
 public:
  ScaffoldError(ScaffoldErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ScaffoldErrorKind kind() const { return kind_; }

 private:
  ScaffoldErrorKind kind_;
};

// Creates participants/part-01..NN (labels zero-padded, minimum width 2),
// optional ses-01..MM, the given task subdirectories, and stub README and
// dataset_description.json sidecars.
void scaffold_tree(const std::filesystem::path& root, int n_participants,
                   std::optional<int> sessions, const std::vector<std::string>& task_names);

}  // namespace lpds
