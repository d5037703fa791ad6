#ifndef MOLSCERT_EMBEDDED_DATA_HPP
#define MOLSCERT_EMBEDDED_DATA_HPP

// Dataset texts compiled in from data/*.txt (see cmake/embed_datasets.cmake).
// The files in data/ are the same bytes; they exist so the transcriptions can
// be diffed and loaded as external files.
namespace molscert::embedded {

extern const char* const kN54PA;
extern const char* const kN96PA;
extern const char* const kN108DM;
extern const char* const kN45DM;

}  // namespace molscert::embedded

#endif
