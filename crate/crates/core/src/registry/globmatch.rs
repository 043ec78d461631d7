//! Minimal glob matcher for check-id filters: `*` (any run) and `?` (any
//! single character).

pub fn glob_match(pattern: &str, text: &str) -> bool {
    let p: Vec<char> = pattern.chars().collect();
    let t: Vec<char> = text.chars().collect();
    // iterative wildcard matching with backtracking over the last star
    let (mut pi, mut ti) = (0usize, 0usize);
    let (mut star, mut mark) = (usize::MAX, 0usize);
    while ti < t.len() {
        if pi < p.len() && (p[pi] == '?' || p[pi] == t[ti]) {
            pi += 1;
            ti += 1;
        } else if pi < p.len() && p[pi] == '*' {
            star = pi;
            mark = ti;
            pi += 1;
        } else if star != usize::MAX {
            pi = star + 1;
            mark += 1;
            ti = mark;
        } else {
            return false;
        }
    }
    while pi < p.len() && p[pi] == '*' {
        pi += 1;
    }
    pi == p.len()
}

#[cfg(test)]
mod tests {
    use super::glob_match;

    #[test]
    fn literals_and_wildcards() {
        assert!(glob_match("q783-*", "q783-functional"));
        assert!(glob_match("*", "anything"));
        assert!(glob_match("entry?4", "entry14"));
        assert!(!glob_match("q783-*", "q295-reciprocity"));
        assert!(glob_match("*-cf-?", "letter-cf-1"));
        assert!(!glob_match("", "x"));
        assert!(glob_match("", ""));
    }
}
