#include "lpds/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <system_error>

#include "json.hpp"
#include "lpds/version.hpp"

namespace fs = std::filesystem;

namespace lpds {

namespace {

bool hidden(const std::string& name) { return !name.empty() && name.front() == '.'; }

struct DirEntry {
  std::string name;
  fs::path path;
  bool is_dir = false;
  bool is_symlink = false;
  std::uint64_t size = 0;
};

// Lexicographically sorted listing; hidden entries dropped. Symlink status
// is taken before any dereference so dangling links are safe to record.
std::vector<DirEntry> list_dir(const fs::path& dir) {
  std::vector<DirEntry> out;
  std::error_code ec;
  fs::directory_iterator it(dir, ec);
  if (ec) throw ScanError(ScanErrorKind::IoFailure, dir.generic_string(), ec.message());
  for (const auto& entry : it) {
    DirEntry e;
    e.name = entry.path().filename().string();
    if (hidden(e.name)) continue;
    e.path = entry.path();
    e.is_symlink = fs::is_symlink(fs::symlink_status(entry.path(), ec));
    if (!e.is_symlink) {
      e.is_dir = entry.is_directory(ec);
      if (!e.is_dir) {
        e.size = entry.file_size(ec);
        if (ec) throw ScanError(ScanErrorKind::IoFailure, entry.path().generic_string(), ec.message());
      }
    }
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(),
            [](const DirEntry& a, const DirEntry& b) { return a.name < b.name; });
  return out;
}

std::string rel(const fs::path& root, const fs::path& p) {
  return p.lexically_relative(root).generic_string();
}

TaskDir scan_task_dir(const fs::path& root, const DirEntry& dir, const std::string& participant,
                      const std::optional<std::string>& session, ProjectTree& tree) {
  TaskDir task;
  task.name = dir.name;
  for (const auto& e : list_dir(dir.path)) {
    if (e.is_symlink) {
      tree.symlinks_skipped.push_back(rel(root, e.path));
      continue;
    }
    if (e.is_dir) {
      task.subdirs.push_back(e.name);
      continue;
    }
    FileRecord rec;
    rec.relative_path = rel(root, e.path);
    rec.filename = e.name;
    rec.name = parse_name(e.name);
    rec.size_bytes = e.size;
    rec.participant_label = participant;
    rec.session_label = session;
    rec.task_dir = task.name;
    task.files.push_back(std::move(rec));
  }
  return task;
}

SessionDir scan_session_dir(const fs::path& root, const DirEntry& dir,
                            const std::string& participant, ProjectTree& tree) {
  SessionDir ses;
  ses.label = dir.name.substr(4);  // after "ses-"
  ses.label_valid = is_valid_entity_value(ses.label);
  for (const auto& e : list_dir(dir.path)) {
    if (e.is_symlink) {
      tree.symlinks_skipped.push_back(rel(root, e.path));
      continue;
    }
    if (e.is_dir) {
      ses.task_dirs.push_back(scan_task_dir(root, e, participant, ses.label, tree));
    } else {
      ses.stray_files.push_back(e.name);
    }
  }
  return ses;
}

ParticipantDir scan_participant_dir(const fs::path& root, const DirEntry& dir, ProjectTree& tree) {
  ParticipantDir part;
  part.dir_name = dir.name;
  part.label = dir.name.substr(5);  // after "part-"
  for (const auto& e : list_dir(dir.path)) {
    if (e.is_symlink) {
      tree.symlinks_skipped.push_back(rel(root, e.path));
      continue;
    }
    if (e.is_dir) {
      if (e.name.rfind("ses-", 0) == 0) {
        part.sessions.push_back(scan_session_dir(root, e, part.label, tree));
      } else {
        part.task_dirs.push_back(scan_task_dir(root, e, part.label, std::nullopt, tree));
      }
    } else if (e.name == "participant_metadata.json") {
      part.metadata_present = true;
    } else {
      part.stray_files.push_back(e.name);
    }
  }
  return part;
}

}  // namespace

int ProjectTree::session_count() const {
  int n = 0;
  for (const auto& p : participants) n += static_cast<int>(p.sessions.size());
  return n;
}

int ProjectTree::file_count() const {
  int n = 0;
  for (const auto& p : participants) {
    for (const auto& t : p.task_dirs) n += static_cast<int>(t.files.size());
    for (const auto& s : p.sessions) {
      for (const auto& t : s.task_dirs) n += static_cast<int>(t.files.size());
    }
  }
  return n;
}

ProjectTree scan_tree(const fs::path& root) {
  std::error_code ec;
  if (!fs::exists(root, ec)) {
    throw ScanError(ScanErrorKind::RootNotFound, root.generic_string(),
                    "project root not found: " + root.generic_string());
  }
  if (!fs::is_directory(root, ec)) {
    throw ScanError(ScanErrorKind::NotADirectory, root.generic_string(),
                    "project root is not a directory: " + root.generic_string());
  }

  ProjectTree tree;
  tree.root = root.generic_string();

  for (const auto& e : list_dir(root)) {
    if (e.is_symlink) {
      tree.symlinks_skipped.push_back(rel(root, e.path));
      continue;
    }
    if (e.is_dir) {
      if (e.name == "participants") {
        tree.has_participants_dir = true;
        for (const auto& sub : list_dir(e.path)) {
          if (sub.is_symlink) {
            tree.symlinks_skipped.push_back(rel(root, sub.path));
            continue;
          }
          if (!sub.is_dir) {
            tree.participants_stray_files.push_back(sub.name);
            continue;
          }
          if (sub.name.rfind("part-", 0) == 0 && is_valid_entity_value(sub.name.substr(5))) {
            tree.participants.push_back(scan_participant_dir(root, sub, tree));
          } else {
            tree.invalid_participant_dirs.push_back(sub.name);
          }
        }
      } else if (e.name == "derivatives") {
        tree.has_derivatives = true;  // outputs live here; not raw data
      }
      continue;
    }
    if (e.name == "dataset_description.json") tree.has_dataset_description = true;
    else if (e.name == "participants.tsv") tree.has_participants_tsv = true;
    else if (e.name == "README" || e.name.rfind("README.", 0) == 0) tree.has_readme = true;
    else if (e.name == "CHANGES" || e.name.rfind("CHANGES.", 0) == 0) tree.has_changes = true;
    // other root-level files (configs, notes) are none of the scanner's business
  }

  return tree;
}

void scaffold_tree(const fs::path& root, int n_participants, std::optional<int> sessions,
                   const std::vector<std::string>& task_names) {
  if (n_participants < 1) {
    throw ScaffoldError(ScaffoldErrorKind::InvalidCount, "n_participants must be >= 1");
  }
  if (sessions && *sessions < 1) {
    throw ScaffoldError(ScaffoldErrorKind::InvalidCount, "sessions must be >= 1 when given");
  }
  if (task_names.empty()) {
    throw ScaffoldError(ScaffoldErrorKind::InvalidCount, "at least one task name is required");
  }
  std::error_code ec;
  if (fs::exists(root, ec) && !fs::is_empty(root, ec)) {
    throw ScaffoldError(ScaffoldErrorKind::RootNotEmpty,
                        "refusing to scaffold into non-empty directory: " + root.generic_string());
  }

  auto padded = [](int value, int total) {
    int width = 2;
    for (int v = total; v >= 100; v /= 10) ++width;
    std::string s = std::to_string(value);
    while (static_cast<int>(s.size()) < width) s.insert(s.begin(), '0');
    return s;
  };

  fs::create_directories(root / "participants");
  for (int p = 1; p <= n_participants; ++p) {
    fs::path pdir = root / "participants" / ("part-" + padded(p, n_participants));
    if (sessions) {
      for (int s = 1; s <= *sessions; ++s) {
        fs::path sdir = pdir / ("ses-" + padded(s, *sessions));
        for (const auto& task : task_names) fs::create_directories(sdir / task);
      }
    } else {
      for (const auto& task : task_names) fs::create_directories(pdir / task);
    }
  }

  {
    std::ofstream readme(root / "README");
    readme << root.filename().string() << "\n\n"
           << "Project tree scaffolded with " << kToolName << " " << kToolVersion << ".\n"
           << "Place data files inside the task directories under participants/.\n";
  }
  {
    nlohmann::ordered_json desc;
    desc["name"] = root.filename().string();
    desc["lpds_version"] = kLpdsVersion;
    std::ofstream out(root / "dataset_description.json");
    out << desc.dump(2) << "\n";
  }
}

}  // namespace lpds
