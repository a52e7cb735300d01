#pragma once

// Some installs ship libbz2 without its development header. The single
// entry point used here has been ABI-stable since bzip2 1.0.
#if defined(GROWCA_HAVE_BZLIB_H)
#include <bzlib.h>
#else
extern "C" int BZ2_bzBuffToBuffCompress(char* dest, unsigned int* destLen, char* source,
                                        unsigned int sourceLen, int blockSize100k,
                                        int verbosity, int workFactor);
#define BZ_OK 0
#endif
