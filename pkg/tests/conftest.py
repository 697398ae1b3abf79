import hypothesis

# Some properties drive real enumeration; a per-example deadline only adds noise.
hypothesis.settings.register_profile("suite", deadline=None, max_examples=60)
hypothesis.settings.load_profile("suite")
