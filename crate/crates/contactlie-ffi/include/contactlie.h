/* C interface to the contactlie toolkit.
 *
 * Maintained by hand; the `header_sync` test keeps the declarations here in
 * lockstep with the exported symbols of the library.
 *
 * Conventions:
 *   - Fallible calls return a CLIE_* status code.
 *   - Results cross the boundary as canonical JSON strings allocated by the
 *     library; release them with clie_string_free().
 *   - On failure, clie_last_error() returns a thread-local message (for
 *     CLIE_ERR_MATH it is the structured violation report JSON). The pointer
 *     is valid until the next failing call on the same thread.
 */

#ifndef CONTACTLIE_H
#define CONTACTLIE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. */
#define CLIE_OK 0
#define CLIE_ERR_NULL_ARGUMENT 1
#define CLIE_ERR_INVALID_UTF8 2
#define CLIE_ERR_SCHEMA 3
#define CLIE_ERR_MATH 4
#define CLIE_ERR_UNSUPPORTED 5
#define CLIE_ERR_PANIC 6

/* Opaque parsed document: a Lie algebra with optional structure tensors,
 * metric, and bookkeeping maps. */
typedef struct ClieDocument ClieDocument;

/* Parse a JSON document. On CLIE_OK, *out owns the handle; release it with
 * clie_document_free(). */
int clie_document_parse(const char *json, ClieDocument **out);

/* Build a document from a built-in catalog family. params is a
 * comma-separated key=value list and may be NULL. */
int clie_document_from_catalog(const char *name, const char *params,
                               ClieDocument **out);

/* Release a document handle. NULL is a no-op. */
void clie_document_free(ClieDocument *doc);

/* Dimension of the underlying algebra. */
int clie_document_dim(const ClieDocument *doc, size_t *out);

/* Canonical JSON serialization of the document itself. */
int clie_document_to_json(const ClieDocument *doc, char **out);

/* Validate the bracket table, the structure identities, and the metric.
 * Identity failures return CLIE_ERR_MATH with the violation report in
 * clie_last_error(). */
int clie_validate(const ClieDocument *doc, char **out);

/* Classification report. Pass nonzero dim3 or dim7 to run the
 * low-dimensional recognizers; 0/0 reports the structure classes. */
int clie_classify(const ClieDocument *doc, int dim3, int dim7, char **out);

/* Z, delta, psi and the structure case of a 3-contact document. */
int clie_invariants(const ClieDocument *doc, char **out);

/* Whether the 3-contact structure is canonical, and beta. */
int clie_canonical(const ClieDocument *doc, char **out);

/* Canonical connection and torsion; nonzero check_parallel also decides
 * whether the torsion is parallel. Needs a 3-contact document with a
 * metric. */
int clie_torsion(const ClieDocument *doc, int check_parallel, char **out);

/* First homology of the order-m lattice quotient on a rank-4n translation
 * lattice. Orders without a planar lattice rotation (m not in
 * {1,2,3,4,6}) return CLIE_ERR_MATH. */
int clie_homology_gamma(size_t m, size_t n, char **out);

/* First homology of the quaternion-group quotient on a rank-4n translation
 * lattice. */
int clie_homology_quaternion(size_t n, char **out);

/* JSON array of the built-in catalog family names. */
int clie_catalog_names(char **out);

/* Free a string returned by this library. NULL is a no-op. */
void clie_string_free(char *s);

/* Message of the last failure on this thread, or NULL. */
const char *clie_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* CONTACTLIE_H */
