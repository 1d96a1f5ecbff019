class RegimeMismatchWarning(UserWarning):
    pass
