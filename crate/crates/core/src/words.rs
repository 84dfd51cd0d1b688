//! Word enumeration helpers.

/// All words over `letters` letters of length at most `max_len`, shortest
/// first and lexicographic (by letter index) within each length.
pub fn all_words(letters: usize, max_len: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..=max_len).flat_map(move |len| words_of_length(letters, len))
}

/// Words of exactly `len` letters in lexicographic order.
pub fn words_of_length(letters: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut next = if letters == 0 && len > 0 {
        None
    } else {
        Some(vec![0; len])
    };
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        let mut i = len;
        while i > 0 {
            i -= 1;
            if succ[i] + 1 < letters {
                succ[i] += 1;
                next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(current)
    })
}
